#pragma once

#include <vector>

#include "nilrad/structure_table.hpp"

namespace nilrad {

enum class SeriesKind { derived, lower_central, upper_central };

// Chain computed until two consecutive terms agree, truncated at the stable
// term. Decreasing chains that reach zero keep the zero term, so for a
// nilpotent algebra the lower central terms are g^1, ..., g^K, 0.
struct SeriesChain {
    SeriesKind kind;
    std::vector<Subspace> terms;
    bool stabilized = true;

    bool reaches_zero() const { return !terms.empty() && terms.back().dim() == 0; }
    bool reaches_full() const {
        return !terms.empty() && terms.back().dim() == terms.back().ambient();
    }
    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& t : terms) d.push_back(t.dim());
        return d;
    }
};

SeriesChain characteristic_series(const StructureTable& table, SeriesKind kind);

bool is_solvable(const StructureTable& table);
bool is_nilpotent(const StructureTable& table);
bool is_abelian(const StructureTable& table);

// Degree of nilpotency: the largest K with g^K != 0. Throws
// not_nilpotent_error when the lower central series does not reach zero.
int nilindex(const StructureTable& table);

// { x : [x,y] = 0 for all y in h }
Subspace centralizer(const StructureTable& table, const Subspace& h);

// { x : [x,y] in j for all y in i }. Characteristic whenever i and j are;
// callers feed it series terms, centralizers and prior outputs only.
Subspace relative_ideal(const StructureTable& table, const Subspace& i, const Subspace& j);

// Associated graded algebra of the lower central filtration. Basis vectors
// are grouped by layer, layer 1 first; layer k's representatives span the
// deterministic complement of n^{k+1} in n^k.
struct GradedAlgebra {
    std::vector<int> layer_dims;        // (m_1, ..., m_K)
    StructureTable table;               // graded brackets on the layer basis
    std::vector<int> layer_of_index;    // 0-based index -> layer number (1-based)
    std::vector<Mat> layer_reps;        // per layer: rows = representatives in source coords
    StructureTable source;              // the algebra the grading came from
    std::vector<Subspace> lcs;          // n^1, ..., n^K, 0 in source coords

    int dim() const { return table.dim(); }
    int layers() const { return static_cast<int>(layer_dims.size()); }
    // 0-based index range [lo, hi) of a 1-based layer in the graded basis.
    std::pair<int, int> layer_range(int layer) const;
    // Representative of graded basis vector (0-based) in source coordinates.
    Vec rep_of_index(int idx) const;
};

GradedAlgebra associated_graded(const StructureTable& table);

// Same construction with caller-supplied layer representatives (rows must
// span the same complements). Used by the weight screen's re-base probes.
GradedAlgebra graded_from_reps(const StructureTable& table, const std::vector<Subspace>& lcs,
                               const std::vector<Mat>& layer_reps);

} // namespace nilrad
