#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilrad/series.hpp"

namespace nilrad {

// Basis realizing n = m_K (+) ... (+) m_1 with every layer-k vector (k >= 2)
// an exact bracket of a layer-(k-1) and a layer-1 vector. Adapted indices run
// deepest layer first, so a derivation's matrix in adapted coordinates is
// upper block triangular and the (m_1, m_1) block sits bottom-right.
struct AdaptedBasis {
    Mat to_adapted;              // original coords -> adapted coords
    Mat from_adapted;            // inverse; column j = adapted vector j
    std::vector<int> layer_dims; // (m_1, ..., m_K)

    struct Witness {
        int left, right; // 0-based adapted indices; e_j = [e_left, e_right]
        bool operator==(const Witness&) const = default;
    };
    std::map<int, Witness> witnesses; // 0-based adapted index -> pair

    int dim() const { return to_adapted.rows; }
    int layers() const { return static_cast<int>(layer_dims.size()); }
    int layer_of_adapted_index(int idx) const; // 1-based layer
    std::pair<int, int> layer_range(int layer) const; // 0-based [lo, hi)
};

AdaptedBasis adapted_basis(const StructureTable& table);

Mat to_adapted_coords(const AdaptedBasis& basis, const Mat& d);

// Submatrix mapping layer col_layer into layer row_layer, in adapted coords.
Mat block_of(const AdaptedBasis& basis, const Mat& adapted_d, int row_layer, int col_layer);

// Blocks with row layer shallower than column layer must vanish for any
// derivation of a nilpotent algebra.
bool block_upper_triangular(const AdaptedBasis& basis, const Mat& adapted_d);

// A derivation rewritten in adapted coordinates with per-layer block access.
struct BlockView {
    const AdaptedBasis* basis;
    Mat derivation; // adapted coordinates

    Mat block(int row_layer, int col_layer) const {
        return block_of(*basis, derivation, row_layer, col_layer);
    }
    bool upper_triangular() const { return block_upper_triangular(*basis, derivation); }
};

inline BlockView block_view(const AdaptedBasis& basis, const Mat& d) {
    return {&basis, to_adapted_coords(basis, d)};
}

// The (m_1, m_1) diagonal block of a derivation; for an abelian algebra the
// whole matrix (m_1 is everything).
Mat m1_block(const StructureTable& table, const Mat& d);
Mat m1_block(const AdaptedBasis& basis, const Mat& d);

// Upper bound dim n - dim n^2 on the number of non-nilpotent generators any
// solvable extension with nilradical n can add.
int solvable_extension_bound(const StructureTable& table);

// Lower bound (dim s + dim s^(2)) / 2 on the nilradical dimension of a
// solvable algebra with the given invariants.
Rat nilradical_lower_bound(int dim_s, int dim_s_derived2);

struct CommutationResult {
    bool commute = true;
    int first = -1, second = -1; // witness pair of indices into ds on failure
};

// Checks that the (m_1, m_1) blocks of all given derivations commute
// pairwise. Every d must satisfy the Leibniz rule.
CommutationResult m1_blocks_commute(const StructureTable& table, const AdaptedBasis& basis,
                                    const std::vector<Mat>& ds);

} // namespace nilrad
