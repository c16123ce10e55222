#include "nilrad/extensions.hpp"

#include <algorithm>
#include <cassert>

#include "nilrad/derivations.hpp"
#include "nilrad/errors.hpp"

namespace nilrad {

int AdaptedBasis::layer_of_adapted_index(int idx) const {
    int K = layers();
    int off = 0;
    for (int layer = K; layer >= 1; --layer) {
        off += layer_dims[layer - 1];
        if (idx < off) return layer;
    }
    throw dimension_error("adapted index out of range");
}

std::pair<int, int> AdaptedBasis::layer_range(int layer) const {
    int K = layers();
    int lo = 0;
    for (int l = K; l > layer; --l) lo += layer_dims[l - 1];
    return {lo, lo + layer_dims[layer - 1]};
}

namespace {

int leading_index(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) return static_cast<int>(i);
    return -1;
}

} // namespace

AdaptedBasis adapted_basis(const StructureTable& table) {
    SeriesChain lc = characteristic_series(table, SeriesKind::lower_central);
    if (!lc.reaches_zero()) throw not_nilpotent_error("adapted_basis: algebra is not nilpotent");
    int K = static_cast<int>(lc.terms.size()) - 1;
    if (K < 2) throw no_layers_error("adapted_basis: abelian algebra has a single trivial layer");

    // layer vectors in original coordinates plus witness pair positions
    std::vector<std::vector<Vec>> layers(static_cast<size_t>(K));
    struct RawWitness {
        int left_layer, left_pos, right_layer, right_pos;
    };
    std::vector<std::map<int, RawWitness>> raw_witnesses(static_cast<size_t>(K));

    Subspace m1 = complement(lc.terms[0], lc.terms[1]);
    for (int r = 0; r < m1.dim(); ++r) layers[0].push_back(m1.basis_row(r));

    for (int k = 2; k <= K; ++k) {
        int want = lc.terms[k - 1].dim() - lc.terms[k].dim();
        const Subspace& deeper = lc.terms[k];
        // candidate pairs: one factor from layer k-1, one from layer 1,
        // ordered by the leading indices of the two vectors
        struct Cand {
            int lead_lo, lead_hi;
            int left_layer, left_pos, right_layer, right_pos; // bracket order
        };
        std::vector<Cand> cands;
        auto add_cand = [&](int la, int pa, int lb, int pb) {
            const Vec& va = layers[la - 1][pa];
            const Vec& vb = layers[lb - 1][pb];
            int ia = leading_index(va), ib = leading_index(vb);
            if (ia <= ib)
                cands.push_back({ia, ib, la, pa, lb, pb});
            else
                cands.push_back({ib, ia, lb, pb, la, pa});
        };
        if (k == 2) {
            for (size_t i = 0; i < layers[0].size(); ++i)
                for (size_t j = i + 1; j < layers[0].size(); ++j)
                    add_cand(1, static_cast<int>(i), 1, static_cast<int>(j));
        } else {
            for (size_t i = 0; i < layers[k - 2].size(); ++i)
                for (size_t j = 0; j < layers[0].size(); ++j)
                    add_cand(k - 1, static_cast<int>(i), 1, static_cast<int>(j));
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return std::tie(a.lead_lo, a.lead_hi) < std::tie(b.lead_lo, b.lead_hi);
        });
        std::vector<Vec> residues;
        for (const Cand& c : cands) {
            if (static_cast<int>(layers[k - 1].size()) == want) break;
            Vec w = table.bracket(layers[c.left_layer - 1][c.left_pos],
                                  layers[c.right_layer - 1][c.right_pos]);
            Vec res = deeper.reduce(w);
            if (vec_is_zero(res)) continue;
            std::vector<Vec> trial = residues;
            trial.push_back(res);
            Mat m = Mat::from_rows(trial);
            if (rref_in_place(m) <= static_cast<int>(residues.size())) continue;
            residues.push_back(res);
            int pos = static_cast<int>(layers[k - 1].size());
            layers[k - 1].push_back(w);
            raw_witnesses[k - 1][pos] =
                RawWitness{c.left_layer, c.left_pos, c.right_layer, c.right_pos};
        }
        if (static_cast<int>(layers[k - 1].size()) != want)
            throw error("adapted_basis: bracket scan failed to fill a layer");
    }

    AdaptedBasis ab;
    for (int k = 1; k <= K; ++k) ab.layer_dims.push_back(static_cast<int>(layers[k - 1].size()));
    // stack deepest layer first
    std::vector<Vec> rows;
    std::vector<std::vector<int>> adapted_index(static_cast<size_t>(K));
    for (int k = K; k >= 1; --k) {
        for (size_t p = 0; p < layers[k - 1].size(); ++p) {
            adapted_index[k - 1].push_back(static_cast<int>(rows.size()));
            rows.push_back(layers[k - 1][p]);
        }
    }
    Mat stacked = Mat::from_rows(rows);
    ab.from_adapted = transpose(stacked);
    auto inv = inverse(ab.from_adapted);
    if (!inv) throw error("adapted_basis: change of basis is singular");
    ab.to_adapted = *inv;
    for (int k = 2; k <= K; ++k) {
        for (const auto& [pos, w] : raw_witnesses[k - 1]) {
            int j = adapted_index[k - 1][pos];
            ab.witnesses[j] = AdaptedBasis::Witness{
                adapted_index[w.left_layer - 1][w.left_pos],
                adapted_index[w.right_layer - 1][w.right_pos]};
        }
    }
    return ab;
}

Mat to_adapted_coords(const AdaptedBasis& basis, const Mat& d) {
    return mat_mul(basis.to_adapted, mat_mul(d, basis.from_adapted));
}

Mat block_of(const AdaptedBasis& basis, const Mat& adapted_d, int row_layer, int col_layer) {
    auto [rlo, rhi] = basis.layer_range(row_layer);
    auto [clo, chi] = basis.layer_range(col_layer);
    Mat b(rhi - rlo, chi - clo);
    for (int r = rlo; r < rhi; ++r)
        for (int c = clo; c < chi; ++c) b.at(r - rlo, c - clo) = adapted_d.at(r, c);
    return b;
}

bool block_upper_triangular(const AdaptedBasis& basis, const Mat& adapted_d) {
    int K = basis.layers();
    for (int row_layer = 1; row_layer <= K; ++row_layer)
        for (int col_layer = row_layer + 1; col_layer <= K; ++col_layer)
            if (!mat_is_zero(block_of(basis, adapted_d, row_layer, col_layer))) return false;
    return true;
}

Mat m1_block(const AdaptedBasis& basis, const Mat& d) {
    return block_of(basis, to_adapted_coords(basis, d), 1, 1);
}

Mat m1_block(const StructureTable& table, const Mat& d) {
    if (is_abelian(table)) return d;
    return m1_block(adapted_basis(table), d);
}

int solvable_extension_bound(const StructureTable& table) {
    SeriesChain lc = characteristic_series(table, SeriesKind::lower_central);
    if (!lc.reaches_zero())
        throw not_nilpotent_error("solvable_extension_bound: algebra is not nilpotent");
    return table.dim() - lc.terms[1].dim();
}

Rat nilradical_lower_bound(int dim_s, int dim_s_derived2) {
    if (dim_s <= 0 || dim_s_derived2 < 0)
        throw error("nilradical_lower_bound: dimensions must be non-negative, dim s positive");
    if (dim_s_derived2 > dim_s)
        throw error("nilradical_lower_bound: dim s^(2) cannot exceed dim s");
    return rat(dim_s + dim_s_derived2, 2);
}

CommutationResult m1_blocks_commute(const StructureTable& table, const AdaptedBasis& basis,
                                    const std::vector<Mat>& ds) {
    std::vector<Mat> blocks;
    for (const Mat& d : ds) {
        if (d.rows != table.dim() || d.cols != table.dim())
            throw dimension_error("m1_blocks_commute: derivation has wrong shape");
        if (!satisfies_leibniz(table, d))
            throw not_a_derivation_error("m1_blocks_commute: matrix violates the Leibniz rule");
        blocks.push_back(m1_block(basis, d));
    }
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            Mat comm = mat_sub(mat_mul(blocks[i], blocks[j]), mat_mul(blocks[j], blocks[i]));
            if (!mat_is_zero(comm))
                return {false, static_cast<int>(i), static_cast<int>(j)};
        }
    return {};
}

} // namespace nilrad
