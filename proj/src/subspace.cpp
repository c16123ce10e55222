#include "nilrad/subspace.hpp"

#include <algorithm>

#include "nilrad/errors.hpp"

namespace nilrad {

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) rows.push_back(unit_vec(ambient, i));
    return span(ambient, rows);
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw dimension_error("span vector has wrong ambient dimension");
    Mat m = vectors.empty() ? Mat(0, ambient) : Mat::from_rows(vectors);
    std::vector<int> pivots;
    int rank = rref_in_place(m, &pivots);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(rank, ambient);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < ambient; ++c) s.basis_.at(r, c) = m.at(r, c);
    s.pivots_ = pivots;
    return s;
}

Subspace Subspace::span_rows(const Mat& rows) {
    std::vector<Vec> vs;
    for (int r = 0; r < rows.rows; ++r) vs.push_back(rows.row(r));
    return span(rows.cols, vs);
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw dimension_error("reduce: ambient dimension mismatch");
    Vec r = v;
    for (int i = 0; i < basis_.rows; ++i) {
        const Rat& c = r[pivots_[i]];
        if (is_zero(c)) continue;
        Rat f = c; // pivot entries are 1
        for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains_vec(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw dimension_error("contains: ambient mismatch");
    for (int r = 0; r < other.basis_.rows; ++r)
        if (!contains_vec(other.basis_.row(r))) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (basis_.rows != o.basis_.rows) return basis_.rows < o.basis_.rows;
    for (size_t i = 0; i < basis_.a.size(); ++i) {
        int c = cmp(basis_.a[i], o.basis_.a[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw dimension_error("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < a.dim(); ++r) rows.push_back(a.basis_row(r));
    for (int r = 0; r < b.dim(); ++r) rows.push_back(b.basis_row(r));
    return Subspace::span(a.ambient(), rows);
}

// Zassenhaus: row reduce [A|A; B|0]; rows with vanishing left half carry an
// intersection basis in the right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw dimension_error("intersect: ambient mismatch");
    int n = a.ambient();
    Mat m(a.dim() + b.dim(), 2 * n);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            m.at(r, c) = a.basis().at(r, c);
            m.at(r, n + c) = a.basis().at(r, c);
        }
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < n; ++c) m.at(a.dim() + r, c) = b.basis().at(r, c);
    rref_in_place(m);
    std::vector<Vec> rows;
    for (int r = 0; r < m.rows; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (!is_zero(m.at(r, c))) left_zero = false;
        if (!left_zero) continue;
        Vec v(static_cast<size_t>(n));
        bool nonzero = false;
        for (int c = 0; c < n; ++c) {
            v[c] = m.at(r, n + c);
            if (!is_zero(v[c])) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

Subspace complement(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw dimension_error("complement: ambient mismatch");
    if (!a.contains(b)) throw containment_error("complement: second argument not contained in first");
    std::vector<bool> in_b(static_cast<size_t>(a.ambient()), false);
    for (int p : b.pivots()) in_b[p] = true;
    std::vector<Vec> rows;
    for (int r = 0; r < a.dim(); ++r)
        if (!in_b[a.pivots()[r]]) rows.push_back(a.basis_row(r));
    return Subspace::span(a.ambient(), rows);
}

} // namespace nilrad
