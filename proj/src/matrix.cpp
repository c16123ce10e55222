#include "nilrad/matrix.hpp"

#include <stdexcept>

#include "nilrad/errors.hpp"

namespace nilrad {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    std::string body = s[0] == '+' ? s.substr(1) : s; // GMP rejects a leading plus
    Rat q;
    if (body.empty() || q.set_str(body, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit_vec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v[i] = 1;
    return v;
}

void vec_add_scaled(Vec& dst, const Rat& c, const Vec& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols)
            throw dimension_error("ragged row list");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw dimension_error("matrix product shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rat& ykj = y.at(k, j);
                if (!is_zero(ykj)) z.at(i, j) += xik * ykj;
            }
        }
    return z;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    if (m.cols != static_cast<int>(v.size())) throw dimension_error("matrix apply shape mismatch");
    Vec out(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!is_zero(m.at(i, j))) out[i] += m.at(i, j) * v[j];
    return out;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw dimension_error("matrix sum shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw dimension_error("matrix diff shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Mat mat_scale(const Rat& c, const Mat& m) {
    Mat z = m;
    for (auto& x : z.a) x *= c;
    return z;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

bool mat_is_zero(const Mat& m) {
    for (const auto& x : m.a)
        if (!is_zero(x)) return false;
    return true;
}

Rat mat_trace(const Mat& m) {
    if (m.rows != m.cols) throw dimension_error("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
}

Mat mat_pow(const Mat& m, int e) {
    if (m.rows != m.cols) throw dimension_error("power of non-square matrix");
    Mat acc = Mat::identity(m.rows);
    for (int i = 0; i < e; ++i) acc = mat_mul(acc, m);
    return acc;
}

bool mat_is_nilpotent(const Mat& m) {
    if (m.rows != m.cols) throw dimension_error("nilpotency of non-square matrix");
    Mat acc = m;
    if (mat_is_zero(acc)) return true;
    for (int i = 1; i < m.rows; ++i) {
        acc = mat_mul(acc, m);
        if (mat_is_zero(acc)) return true;
    }
    return false;
}

int rref_in_place(Mat& m, std::vector<int>* pivots) {
    int lead = 0;
    int rank = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < m.rows; ++r) {
            if (!is_zero(m.at(r, col))) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
        Rat inv = 1 / m.at(lead, col);
        for (int c = col; c < m.cols; ++c) m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead) continue;
            Rat f = m.at(r, col);
            if (is_zero(f)) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
        ++rank;
    }
    return rank;
}

std::vector<Vec> nullspace(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots;
    rref_in_place(r, &pivots);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = vec_zero(m.cols);
        v[f] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            // row pr has its pivot at column pivots[pr]
            v[pivots[pr]] = -r.at(static_cast<int>(pr), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw dimension_error("inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots;
    int rank = rref_in_place(aug, &pivots);
    if (rank < n) return std::nullopt;
    Mat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

} // namespace nilrad
