#include "nilrad/series.hpp"

#include <cassert>

#include "nilrad/errors.hpp"

namespace nilrad {

SeriesChain characteristic_series(const StructureTable& table, SeriesKind kind) {
    int n = table.dim();
    SeriesChain chain;
    chain.kind = kind;
    Subspace full = Subspace::full(n);
    switch (kind) {
    case SeriesKind::derived:
    case SeriesKind::lower_central: {
        Subspace cur = full;
        chain.terms.push_back(cur);
        for (;;) {
            Subspace next = kind == SeriesKind::derived ? bracket_subspaces(table, cur, cur)
                                                        : bracket_subspaces(table, cur, full);
            if (next == cur) break;
            chain.terms.push_back(next);
            cur = next;
        }
        break;
    }
    case SeriesKind::upper_central: {
        Subspace prev = Subspace::zero(n);
        for (;;) {
            Subspace next = relative_ideal(table, full, prev); // z_k = {x : [x,g] in z_{k-1}}
            if (next == prev) break;
            chain.terms.push_back(next);
            prev = next;
        }
        break;
    }
    }
    return chain;
}

bool is_solvable(const StructureTable& table) {
    return characteristic_series(table, SeriesKind::derived).reaches_zero();
}

bool is_nilpotent(const StructureTable& table) {
    return characteristic_series(table, SeriesKind::lower_central).reaches_zero();
}

bool is_abelian(const StructureTable& table) { return table.entries().empty(); }

int nilindex(const StructureTable& table) {
    SeriesChain lc = characteristic_series(table, SeriesKind::lower_central);
    if (!lc.reaches_zero()) throw not_nilpotent_error("nilindex: algebra is not nilpotent");
    return static_cast<int>(lc.terms.size()) - 1;
}

Subspace centralizer(const StructureTable& table, const Subspace& h) {
    return relative_ideal(table, h, Subspace::zero(table.dim()));
}

Subspace relative_ideal(const StructureTable& table, const Subspace& i, const Subspace& j) {
    int n = table.dim();
    if (i.ambient() != n || j.ambient() != n)
        throw dimension_error("relative_ideal: ambient dimension mismatch");
    // Unknown x; for each basis row y of i require reduce_j([x, y]) = 0.
    std::vector<Vec> eq_rows;
    for (int r = 0; r < i.dim(); ++r) {
        Vec y = i.basis_row(r);
        // columns of the map x -> [x, y], then reduced mod j
        std::vector<Vec> cols;
        cols.reserve(n);
        for (int p = 0; p < n; ++p) cols.push_back(j.reduce(table.bracket(unit_vec(n, p), y)));
        for (int out = 0; out < n; ++out) {
            Vec row(static_cast<size_t>(n));
            bool nonzero = false;
            for (int p = 0; p < n; ++p) {
                row[p] = cols[p][out];
                if (!is_zero(row[p])) nonzero = true;
            }
            if (nonzero) eq_rows.push_back(std::move(row));
        }
    }
    if (eq_rows.empty()) return Subspace::full(n);
    Mat sys = Mat::from_rows(eq_rows);
    return Subspace::span(n, nullspace(sys));
}

std::pair<int, int> GradedAlgebra::layer_range(int layer) const {
    int lo = 0;
    for (int k = 1; k < layer; ++k) lo += layer_dims[k - 1];
    return {lo, lo + layer_dims[layer - 1]};
}

Vec GradedAlgebra::rep_of_index(int idx) const {
    int layer = layer_of_index[idx];
    auto [lo, hi] = layer_range(layer);
    (void)hi;
    return layer_reps[layer - 1].row(idx - lo);
}

GradedAlgebra graded_from_reps(const StructureTable& table, const std::vector<Subspace>& lcs,
                               const std::vector<Mat>& layer_reps) {
    int n = table.dim();
    int K = static_cast<int>(layer_reps.size());
    GradedAlgebra g{std::vector<int>{}, StructureTable(n), {}, layer_reps, table, lcs};
    for (const auto& m : layer_reps) g.layer_dims.push_back(m.rows);
    // stacked representative rows, layer 1 first
    std::vector<Vec> rows;
    for (int k = 0; k < K; ++k) {
        for (int r = 0; r < layer_reps[k].rows; ++r) {
            rows.push_back(layer_reps[k].row(r));
            g.layer_of_index.push_back(k + 1);
        }
    }
    assert(static_cast<int>(rows.size()) == n);
    Mat basis = Mat::from_rows(rows);
    auto coord_map = inverse(transpose(basis)); // v = B^T c  =>  c = (B^T)^{-1} v
    if (!coord_map) throw error("graded basis is singular");
    // offsets per layer
    std::vector<int> offset(static_cast<size_t>(K + 1), 0);
    for (int k = 1; k <= K; ++k) offset[k] = offset[k - 1] + g.layer_dims[k - 1];
    std::vector<BracketDef> defs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int la = g.layer_of_index[a], lb = g.layer_of_index[b];
            int target = la + lb;
            if (target > K) continue; // bracket lands in n^{K+1} = 0
            Vec v = table.bracket(rows[a], rows[b]);
            Vec c = mat_apply(*coord_map, v);
            // components on layers shallower than la+lb must vanish by the
            // filtration property; deeper components are dropped (mod n^{target+1})
            for (int idx = 0; idx < offset[target - 1]; ++idx) assert(is_zero(c[idx]));
            SparseVec rhs;
            for (int idx = offset[target - 1]; idx < offset[target]; ++idx)
                if (!is_zero(c[idx])) rhs.emplace_back(idx + 1, c[idx]);
            if (!rhs.empty()) defs.push_back({a + 1, b + 1, std::move(rhs)});
        }
    }
    g.table = StructureTable::from_brackets(n, defs);
    return g;
}

GradedAlgebra associated_graded(const StructureTable& table) {
    SeriesChain lc = characteristic_series(table, SeriesKind::lower_central);
    if (!lc.reaches_zero()) throw not_nilpotent_error("associated_graded: algebra is not nilpotent");
    int K = static_cast<int>(lc.terms.size()) - 1;
    std::vector<Mat> reps;
    for (int k = 1; k <= K; ++k) {
        Subspace comp = complement(lc.terms[k - 1], lc.terms[k]);
        reps.push_back(comp.basis());
    }
    return graded_from_reps(table, lc.terms, reps);
}

} // namespace nilrad
