#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nilrad/matrix.hpp"
#include "nilrad/subspace.hpp"

namespace nilrad {

// Sparse coefficient vector: (position, value) pairs sorted by position,
// values nonzero. Positions are 0-based internally; formatting and the wire
// format are 1-based throughout.
using SparseVec = std::vector<std::pair<int, Rat>>;

struct BracketDef {
    int j, k;      // 1-based, j < k
    SparseVec rhs; // 1-based positions in input, converted on construction
};

// Lie algebra given by structure constants on an indexed basis:
// [e_j, e_k] = sum_l N_{jk}^l e_l, stored only for j < k.
class StructureTable {
public:
    explicit StructureTable(int dim);

    // Brackets with 1-based indices and 1-based sparse coefficients, as they
    // appear in the wire format. Throws malformed_table_error on bad indices,
    // j >= k, or a duplicate (j,k) pair.
    static StructureTable from_brackets(int dim, const std::vector<BracketDef>& brackets);

    int dim() const { return dim_; }

    // Stored entries, keys 0-based with j < k.
    const std::map<std::pair<int, int>, SparseVec>& entries() const { return entries_; }

    // [e_j, e_k] for any 0-based pair, antisymmetry applied.
    Vec bracket_basis(int j, int k) const;

    // Bilinear extension to arbitrary coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

    // Matrix of ad(z): column p holds the coordinates of [z, e_p].
    Mat ad(const Vec& z) const;
    Mat ad_basis(int j) const; // ad(e_j), 0-based

    // Copy with N_{jk}^l replaced by N_{jk}^l + delta (0-based indices).
    StructureTable with_entry_delta(int j, int k, int l, const Rat& delta) const;

    bool operator==(const StructureTable& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }

private:
    int dim_;
    std::map<std::pair<int, int>, SparseVec> entries_;

    void set_entry(int j, int k, SparseVec v); // 0-based, drops zero entries
};

struct JacobiViolation {
    int j, k, l; // 0-based triple, j < k < l
    Vec defect;  // value of [ej,[ek,el]] + [ek,[el,ej]] + [el,[ej,ek]]
};

struct ValidationResult {
    bool ok = true;
    std::vector<JacobiViolation> violations;
};

// Checks the Jacobi identity over every basis triple j < k < l.
ValidationResult validate_lie_algebra(const StructureTable& table);

// Span of all pairwise brackets of basis vectors of a and b.
Subspace bracket_subspaces(const StructureTable& table, const Subspace& a, const Subspace& b);

} // namespace nilrad
