#include "nilrad/structure_table.hpp"

#include <algorithm>
#include <string>

#include "nilrad/errors.hpp"

namespace nilrad {

StructureTable::StructureTable(int dim) : dim_(dim) {
    if (dim < 1) throw malformed_table_error("dimension must be positive");
}

void StructureTable::set_entry(int j, int k, SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec clean;
    for (auto& [pos, c] : v) {
        if (!clean.empty() && clean.back().first == pos)
            clean.back().second += c;
        else
            clean.emplace_back(pos, c);
    }
    SparseVec nz;
    for (auto& [pos, c] : clean)
        if (!is_zero(c)) nz.emplace_back(pos, c);
    if (nz.empty())
        entries_.erase({j, k});
    else
        entries_[{j, k}] = std::move(nz);
}

StructureTable StructureTable::from_brackets(int dim, const std::vector<BracketDef>& brackets) {
    StructureTable t(dim);
    for (const auto& b : brackets) {
        if (b.j < 1 || b.j > dim || b.k < 1 || b.k > dim)
            throw malformed_table_error("bracket index out of range [1, " + std::to_string(dim) +
                                        "]: (" + std::to_string(b.j) + "," + std::to_string(b.k) + ")");
        if (b.j >= b.k)
            throw malformed_table_error("bracket requires j < k, got (" + std::to_string(b.j) +
                                        "," + std::to_string(b.k) + ")");
        if (t.entries_.count({b.j - 1, b.k - 1}))
            throw malformed_table_error("duplicate bracket (" + std::to_string(b.j) + "," +
                                        std::to_string(b.k) + ")");
        SparseVec v;
        for (const auto& [pos, c] : b.rhs) {
            if (pos < 1 || pos > dim)
                throw malformed_table_error("coefficient index out of range [1, " +
                                            std::to_string(dim) + "]: " + std::to_string(pos));
            v.emplace_back(pos - 1, c);
        }
        t.set_entry(b.j - 1, b.k - 1, std::move(v));
    }
    return t;
}

Vec StructureTable::bracket_basis(int j, int k) const {
    Vec out = vec_zero(dim_);
    if (j == k) return out;
    bool flip = j > k;
    if (flip) std::swap(j, k);
    auto it = entries_.find({j, k});
    if (it == entries_.end()) return out;
    for (const auto& [pos, c] : it->second) out[pos] = flip ? Rat(-c) : c;
    return out;
}

Vec StructureTable::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw dimension_error("bracket: vector dimension mismatch");
    Vec out = vec_zero(dim_);
    for (const auto& [jk, rhs] : entries_) {
        auto [j, k] = jk;
        Rat coef = x[j] * y[k] - x[k] * y[j];
        if (is_zero(coef)) continue;
        for (const auto& [pos, c] : rhs) out[pos] += coef * c;
    }
    return out;
}

Mat StructureTable::ad(const Vec& z) const {
    Mat m(dim_, dim_);
    for (int p = 0; p < dim_; ++p) {
        Vec col = bracket(z, unit_vec(dim_, p));
        for (int i = 0; i < dim_; ++i) m.at(i, p) = col[i];
    }
    return m;
}

Mat StructureTable::ad_basis(int j) const { return ad(unit_vec(dim_, j)); }

StructureTable StructureTable::with_entry_delta(int j, int k, int l, const Rat& delta) const {
    if (j < 0 || k < 0 || l < 0 || j >= dim_ || k >= dim_ || l >= dim_ || j >= k)
        throw malformed_table_error("with_entry_delta: bad indices");
    StructureTable t = *this;
    SparseVec v;
    auto it = entries_.find({j, k});
    if (it != entries_.end()) v = it->second;
    v.emplace_back(l, delta);
    t.set_entry(j, k, std::move(v));
    return t;
}

ValidationResult validate_lie_algebra(const StructureTable& table) {
    ValidationResult res;
    int n = table.dim();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                Vec ej = unit_vec(n, j), ek = unit_vec(n, k), el = unit_vec(n, l);
                Vec d = table.bracket(ej, table.bracket(ek, el));
                vec_add_scaled(d, 1, table.bracket(ek, table.bracket(el, ej)));
                vec_add_scaled(d, 1, table.bracket(el, table.bracket(ej, ek)));
                if (!vec_is_zero(d)) {
                    res.ok = false;
                    res.violations.push_back({j, k, l, std::move(d)});
                }
            }
    return res;
}

Subspace bracket_subspaces(const StructureTable& table, const Subspace& a, const Subspace& b) {
    if (a.ambient() != table.dim() || b.ambient() != table.dim())
        throw dimension_error("bracket_subspaces: ambient dimension mismatch");
    std::vector<Vec> vals;
    for (int r = 0; r < a.dim(); ++r)
        for (int s = 0; s < b.dim(); ++s)
            vals.push_back(table.bracket(a.basis_row(r), b.basis_row(s)));
    return Subspace::span(table.dim(), vals);
}

} // namespace nilrad
