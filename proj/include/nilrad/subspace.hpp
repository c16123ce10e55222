#pragma once

#include <vector>

#include "nilrad/matrix.hpp"

namespace nilrad {

// Subspace of Q^n in canonical form: basis rows in reduced row echelon form
// with strictly increasing pivot columns and no zero rows. Two subspaces are
// equal iff their canonical matrices are identical.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<Vec>& vectors);
    static Subspace span_rows(const Mat& rows);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }
    Vec basis_row(int i) const { return basis_.row(i); }
    const std::vector<int>& pivots() const { return pivots_; }

    // Residue of v after eliminating this subspace's pivot coordinates.
    // Linear in v; zero iff v lies in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains_vec(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Strict total order for use as a container key (ambient, dim, entries).
    bool operator<(const Subspace& o) const;

private:
    int ambient_ = 0;
    Mat basis_{0, 0};
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Deterministic complement of b inside a (requires b <= a): spans the rows
// of a's canonical basis whose pivot columns are not pivot columns of b.
Subspace complement(const Subspace& a, const Subspace& b);

} // namespace nilrad
