#include "nilrad/derivations.hpp"

#include <algorithm>

#include "nilrad/errors.hpp"
#include "nilrad/extensions.hpp"
#include "nilrad/series.hpp"

namespace nilrad {

namespace {

// unknown index of D entry (row p, col q), column-major
inline int unknown_index(int n, int p, int q) { return q * n + p; }

Mat reshape_to_matrix(int n, const Vec& flat) {
    Mat m(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) m.at(p, q) = flat[unknown_index(n, p, q)];
    return m;
}

} // namespace

DerivationSpace derivation_space(const StructureTable& table) {
    int n = table.dim();
    std::vector<Vec> eq_rows;
    // One vector equation per basis pair j < k:
    //   D([e_j,e_k]) - [D e_j, e_k] - [e_j, D e_k] = 0
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Vec c = table.bracket_basis(j, k);
            for (int i = 0; i < n; ++i) {
                Vec row = vec_zero(n * n);
                bool nonzero = false;
                for (int q = 0; q < n; ++q) {
                    if (!is_zero(c[q])) {
                        row[unknown_index(n, i, q)] += c[q];
                        nonzero = true;
                    }
                }
                for (int p = 0; p < n; ++p) {
                    Rat npk = table.bracket_basis(p, k)[i];
                    if (!is_zero(npk)) {
                        row[unknown_index(n, p, j)] -= npk;
                        nonzero = true;
                    }
                    Rat njp = table.bracket_basis(j, p)[i];
                    if (!is_zero(njp)) {
                        row[unknown_index(n, p, k)] -= njp;
                        nonzero = true;
                    }
                }
                if (nonzero) eq_rows.push_back(std::move(row));
            }
        }
    }
    DerivationSpace space;
    if (eq_rows.empty()) {
        for (int u = 0; u < n * n; ++u)
            space.basis.push_back(reshape_to_matrix(n, unit_vec(n * n, u)));
    } else {
        Mat sys = Mat::from_rows(eq_rows);
        for (const Vec& v : nullspace(sys)) space.basis.push_back(reshape_to_matrix(n, v));
    }
    space.dim_total = static_cast<int>(space.basis.size());

    // independent inner derivations, greedy in basis order
    Mat acc(0, n * n);
    std::vector<Vec> acc_rows;
    for (int j = 0; j < n; ++j) {
        Mat adj = table.ad_basis(j);
        Vec flat = vec_zero(n * n);
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p) flat[unknown_index(n, p, q)] = adj.at(p, q);
        std::vector<Vec> trial = acc_rows;
        trial.push_back(flat);
        Mat m = Mat::from_rows(trial);
        if (rref_in_place(m) > static_cast<int>(acc_rows.size())) {
            acc_rows.push_back(flat);
            space.inner_basis.push_back(adj);
        }
    }
    space.dim_inner = static_cast<int>(space.inner_basis.size());
    space.dim_outer = space.dim_total - space.dim_inner;
    return space;
}

bool satisfies_leibniz(const StructureTable& table, const Mat& d) {
    int n = table.dim();
    if (d.rows != n || d.cols != n) throw dimension_error("derivation matrix has wrong shape");
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Vec lhs = mat_apply(d, table.bracket_basis(j, k));
            Vec rhs = table.bracket(d.col(j), unit_vec(n, k));
            vec_add_scaled(rhs, 1, table.bracket(unit_vec(n, j), d.col(k)));
            for (int i = 0; i < n; ++i)
                if (lhs[i] != rhs[i]) return false;
        }
    }
    return true;
}

bool is_nilpotent_derivation(const StructureTable& table, const Mat& d) {
    if (!satisfies_leibniz(table, d))
        throw not_a_derivation_error("matrix violates the Leibniz rule");
    return mat_is_nilpotent(d);
}

namespace {

bool blocks_independent(const std::vector<Mat>& blocks) {
    if (blocks.empty()) return true;
    int m = blocks[0].rows;
    std::vector<Vec> rows;
    for (const Mat& b : blocks) {
        Vec flat;
        flat.reserve(static_cast<size_t>(m) * m);
        for (const auto& x : b.a) flat.push_back(x);
        rows.push_back(std::move(flat));
    }
    Mat sys = Mat::from_rows(rows);
    return rref_in_place(sys) == static_cast<int>(blocks.size());
}

// power traces tr(M), tr(M^2), ..., tr(M^m) all vanish iff M is nilpotent
bool traces_vanish(const Mat& m) {
    Mat acc = m;
    for (int k = 1; k <= m.rows; ++k) {
        if (!is_zero(mat_trace(acc))) return false;
        if (k < m.rows) acc = mat_mul(acc, m);
    }
    return true;
}

// polynomial helpers over Q, coefficient index = degree
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// rational roots of a nonzero polynomial with rational coefficients; returns
// nullopt when the coefficients are too large for trial-division factoring
std::optional<std::vector<Rat>> poly_rational_roots(Poly p) {
    poly_trim(p);
    std::vector<Rat> roots;
    if (p.size() <= 1) return roots;
    // clear denominators to integer coefficients
    mpz_class lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(mpz_class(c.get_num() * (lcm_den / c.get_den())));
    size_t lo = 0;
    while (lo < ip.size() && ip[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(0);
    mpz_class a0 = ip[lo], an = ip.back();
    const mpz_class cap = mpz_class(1000000000000L); // 1e12
    if (abs(a0) > cap || abs(an) > cap) return std::nullopt;
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> ds;
        v = abs(v);
        for (mpz_class d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const auto& pnum : divisors(a0)) {
        for (const auto& qden : divisors(an)) {
            for (int s : {1, -1}) {
                Rat cand(s * pnum, qden);
                cand.canonicalize();
                Rat val = 0;
                for (size_t i = p.size(); i-- > 0;) val = val * cand + p[i];
                if (is_zero(val) && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    return roots;
}

// tr((B0 + t*B1)^k) as a polynomial in t
Poly trace_power_poly(const Mat& b0, const Mat& b1, int k) {
    int m = b0.rows;
    // coefficient matrices of (B0 + t B1)^k, degree <= k
    std::vector<Mat> pow{Mat::identity(m)};
    for (int step = 0; step < k; ++step) {
        std::vector<Mat> next(pow.size() + 1, Mat::zero(m, m));
        for (size_t d = 0; d < pow.size(); ++d) {
            next[d] = mat_add(next[d], mat_mul(pow[d], b0));
            next[d + 1] = mat_add(next[d + 1], mat_mul(pow[d], b1));
        }
        pow = std::move(next);
    }
    Poly p;
    for (const auto& mt : pow) p.push_back(mat_trace(mt));
    poly_trim(p);
    return p;
}

// does span{B0, B1} (2-dim) contain a nonzero nilpotent rational combination?
std::optional<bool> pencil_has_rational_nilpotent(const Mat& b0, const Mat& b1) {
    if (traces_vanish(b1)) return true; // combination (0,1)
    int m = b0.rows;
    Poly g;
    for (int k = 1; k <= m; ++k) {
        Poly pk = trace_power_poly(b0, b1, k);
        g = k == 1 ? pk : poly_gcd(g, pk);
        if (g.size() == 1) return false; // gcd is a nonzero constant
    }
    auto roots = poly_rational_roots(g);
    if (!roots) return std::nullopt;
    for (const Rat& t : *roots) {
        Mat cand = mat_add(b0, mat_scale(t, b1));
        if (!mat_is_zero(cand) && mat_is_nilpotent(cand)) return true;
    }
    return false;
}

} // namespace

Tristate is_nilindependent(const StructureTable& table, const std::vector<Mat>& ds) {
    if (ds.empty()) return Tristate::yes;
    int n = table.dim();
    for (const Mat& d : ds) {
        if (d.rows != n || d.cols != n) throw dimension_error("mixed derivation dimensions");
        if (!satisfies_leibniz(table, d))
            throw not_a_derivation_error("matrix violates the Leibniz rule");
    }
    std::vector<Mat> blocks;
    for (const Mat& d : ds) blocks.push_back(m1_block(table, d));
    // dependent m1-blocks give a nontrivial combination with nilpotent block
    if (!blocks_independent(blocks)) return Tristate::no;
    auto pencil_verdict = [](const std::optional<bool>& has) {
        if (!has) return Tristate::undecided;
        return *has ? Tristate::no : Tristate::yes;
    };
    if (blocks.size() == 1)
        return mat_is_nilpotent(blocks[0]) ? Tristate::no : Tristate::yes;
    if (blocks.size() == 2) {
        if (traces_vanish(blocks[0])) return Tristate::no;
        return pencil_verdict(pencil_has_rational_nilpotent(blocks[0], blocks[1]));
    }
    // r >= 3: use the linear condition tr(M) = 0 to cut the span down, then
    // certify with the quadratic form tr(M^2) when it is definite on the cut.
    int m1 = blocks[0].rows;
    std::vector<Vec> tr_row{Vec(blocks.size())};
    for (size_t i = 0; i < blocks.size(); ++i) tr_row[0][i] = mat_trace(blocks[i]);
    Mat tr_sys = Mat::from_rows(tr_row);
    std::vector<Vec> traceless = nullspace(tr_sys);
    if (traceless.empty()) return Tristate::yes; // tr = 0 has no nonzero solution
    std::vector<Mat> cut;
    for (const Vec& coeffs : traceless) {
        Mat m = Mat::zero(m1, m1);
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!is_zero(coeffs[i])) m = mat_add(m, mat_scale(coeffs[i], blocks[i]));
        cut.push_back(std::move(m));
    }
    if (cut.size() == 1)
        return mat_is_nilpotent(cut[0]) ? Tristate::no : Tristate::yes;
    if (cut.size() == 2) {
        if (traces_vanish(cut[0])) return Tristate::no;
        return pencil_verdict(pencil_has_rational_nilpotent(cut[0], cut[1]));
    }
    // Gram matrix of the necessary condition tr(M^2) = 0 on the cut span
    int r = static_cast<int>(cut.size());
    Mat gram(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram.at(i, j) = mat_trace(mat_mul(cut[i], cut[j]));
    // LDL^T pivots: all strictly positive (or all negative) certifies that
    // tr(M^2) != 0 on the whole cut, hence no nilpotent combination
    Mat g = gram;
    bool definite = true;
    int sign = 0;
    for (int i = 0; i < r && definite; ++i) {
        Rat piv = g.at(i, i);
        int s = sgn(piv);
        if (s == 0) {
            definite = false;
            break;
        }
        if (sign == 0) sign = s;
        if (s != sign) {
            definite = false;
            break;
        }
        for (int rr = i + 1; rr < r; ++rr) {
            Rat f = g.at(rr, i) / piv;
            for (int cc = i; cc < r; ++cc) g.at(rr, cc) -= f * g.at(i, cc);
        }
    }
    if (definite) return Tristate::yes;
    bool all_zero = mat_is_zero(gram);
    if (all_zero && m1 <= 2) return Tristate::no; // every cut element nilpotent
    return Tristate::undecided;
}

bool is_characteristically_nilpotent(const StructureTable& table) {
    if (!is_nilpotent(table)) throw not_nilpotent_error("characteristic nilpotency: input not nilpotent");
    DerivationSpace der = derivation_space(table);
    for (const Mat& d : der.basis)
        if (!mat_is_nilpotent(d)) return false;
    // All basis derivations nilpotent; decide the whole span via the m1-block
    // power-trace forms: the span is all-nilpotent iff tr((sum a_i B_i)^k)
    // vanishes identically for k = 1..m1.
    std::vector<Mat> blocks;
    for (const Mat& d : der.basis) blocks.push_back(m1_block(table, d));
    if (blocks.empty()) return true;
    int m1 = blocks[0].rows;
    int r = static_cast<int>(blocks.size());
    // degree-k multilinear check: symmetrized traces over index multisets
    for (int k = 1; k <= m1; ++k) {
        // iterate multisets i1 <= i2 <= ... <= ik
        std::vector<int> idx(static_cast<size_t>(k), 0);
        for (;;) {
            // sum traces over distinct permutations of idx
            std::vector<int> perm = idx;
            std::sort(perm.begin(), perm.end());
            Rat total = 0;
            do {
                Mat prod = blocks[perm[0]];
                for (int t = 1; t < k; ++t) prod = mat_mul(prod, blocks[perm[t]]);
                total += mat_trace(prod);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!is_zero(total)) return false;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == r - 1) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int t = pos + 1; t < k; ++t) idx[t] = idx[pos];
        }
    }
    return true;
}

} // namespace nilrad
