#include <algorithm>
#include <atomic>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilrad/errors.hpp"
#include "nilrad/levi.hpp"

namespace nilrad {

namespace {

std::vector<int> irrep_weights(int d) {
    std::vector<int> w;
    for (int t = d - 1; t >= 1 - d; t -= 2) w.push_back(t);
    return w;
}

std::vector<int> layer_weight_multiset(const std::vector<int>& irreps) {
    std::vector<int> w;
    for (int d : irreps)
        for (int x : irrep_weights(d)) w.push_back(x);
    std::sort(w.begin(), w.end());
    return w;
}

long count_distinct_permutations(std::vector<int> pool, long cap) {
    std::sort(pool.begin(), pool.end());
    mpz_class total = 1;
    for (size_t i = 2; i <= pool.size(); ++i) total *= static_cast<unsigned long>(i);
    size_t i = 0;
    while (i < pool.size()) {
        size_t j = i;
        mpz_class f = 1;
        while (j < pool.size() && pool[j] == pool[i]) {
            ++j;
            f *= static_cast<unsigned long>(j - i);
        }
        total /= f;
        i = j;
    }
    if (total > cap) return cap + 1;
    return total.get_si();
}

struct GradedEntry {
    int a, b;      // 0-based graded indices, a < b
    SparseVec rhs; // 0-based targets
};

struct ScanContext {
    const GradedAlgebra* graded;
    const IrrepAssignment* assignment;
    std::vector<GradedEntry> entries;                // sorted by target degree
    std::vector<std::vector<int>> layer_multisets;   // assigned weights per layer
    bool trivial_generator_check = false;            // layer-1 weight-0 slot unique & trivial
    json rebase_info;                                // null for the base scan
};

json step_json(int slot, int w, int a, int b) {
    return json{{"slot", slot + 1}, {"weight", w}, {"via", {a + 1, b + 1}}};
}

// Cartan weight propagation plus per-layer multiset comparison plus the
// intertwiner rank check; returns nullopt when the distribution survives.
// Witness construction is skipped for distributions whose contradiction
// would be dropped from the capped report anyway.
std::optional<json> check_distribution(const ScanContext& ctx, const std::vector<int>& dist,
                                       bool want_witness) {
    const GradedAlgebra& g = *ctx.graded;
    int n = g.dim();
    int m1 = g.layer_dims[0];
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> known(static_cast<size_t>(n), false);
    for (int i = 0; i < m1; ++i) {
        weight[i] = dist[i];
        known[i] = true;
    }
    json chain = json::array();
    for (const auto& e : ctx.entries) {
        // degree ordering guarantees both operands are assigned for genuine
        // graded tables; refuse to conclude anything otherwise
        if (!known[e.a] || !known[e.b]) return std::nullopt;
        int tw = weight[e.a] + weight[e.b];
        for (const auto& [slot, c] : e.rhs) {
            if (!known[slot]) {
                known[slot] = true;
                weight[slot] = tw;
                if (want_witness) chain.push_back(step_json(slot, tw, e.a, e.b));
            } else if (weight[slot] != tw) {
                if (!want_witness) return json{{"type", "weight-conflict"}};
                return json{{"type", "weight-conflict"},
                            {"slot", slot + 1},
                            {"weights", {weight[slot], tw}},
                            {"via", {e.a + 1, e.b + 1}},
                            {"chain", chain}};
            }
        }
    }
    // every deeper slot is reached because each graded layer is spanned by
    // brackets of shallower layers; if an input ever breaks that, refuse to
    // derive a contradiction from it
    for (int i = 0; i < n; ++i)
        if (!known[i]) return std::nullopt;
    for (int layer = 1; layer <= g.layers(); ++layer) {
        auto [lo, hi] = g.layer_range(layer);
        std::vector<int> computed;
        for (int i = lo; i < hi; ++i) computed.push_back(weight[i]);
        std::sort(computed.begin(), computed.end());
        if (computed != ctx.layer_multisets[layer - 1]) {
            if (!want_witness) return json{{"type", "layer-multiset"}};
            return json{{"type", "layer-multiset"},
                        {"layer", layer},
                        {"computed", computed},
                        {"assigned", ctx.layer_multisets[layer - 1]},
                        {"chain", chain}};
        }
    }

    if (ctx.trivial_generator_check) {
        int zero_slot = -1;
        for (int i = 0; i < m1; ++i)
            if (dist[i] == 0) zero_slot = i;
        if (zero_slot >= 0) {
            Vec gen = g.rep_of_index(zero_slot);
            // per layer: some block-to-slot matching must leave every block
            // with an admissible intertwiner rank
            for (int layer = 1; layer <= g.layers(); ++layer) {
                auto [lo, hi] = g.layer_range(layer);
                const std::vector<int>& irreps = ctx.assignment->per_layer[layer - 1];
                // enumerate partitions of the slots into weight-compatible blocks
                std::vector<int> slots;
                for (int i = lo; i < hi; ++i) slots.push_back(i);
                std::vector<std::vector<std::vector<int>>> matchings;
                std::vector<std::vector<int>> current(irreps.size());
                std::vector<std::vector<int>> remaining; // per block: unmatched weights
                for (int d : irreps) remaining.push_back(irrep_weights(d));
                bool capped = false;
                std::function<void(size_t)> match = [&](size_t si) {
                    if (matchings.size() >= 64) {
                        capped = true;
                        return;
                    }
                    if (si == slots.size()) {
                        matchings.push_back(current);
                        return;
                    }
                    int slot = slots[si];
                    for (size_t bi = 0; bi < irreps.size(); ++bi) {
                        auto it = std::find(remaining[bi].begin(), remaining[bi].end(),
                                            weight[slot]);
                        if (it == remaining[bi].end()) continue;
                        int taken = *it;
                        remaining[bi].erase(it);
                        current[bi].push_back(slot);
                        match(si + 1);
                        current[bi].pop_back();
                        remaining[bi].push_back(taken);
                    }
                };
                match(0);
                if (matchings.empty() || capped) continue; // only conclude from a full enumeration
                bool layer_ok = false;
                json fail;
                for (const auto& matching : matchings) {
                    bool ok = true;
                    for (size_t bi = 0; bi < matching.size() && ok; ++bi) {
                        int d = irreps[bi];
                        if (d < 2) continue;
                        bool self_block = false;
                        for (int s : matching[bi])
                            if (s == zero_slot) self_block = true;
                        if (self_block) continue;
                        std::vector<Vec> av;
                        const Subspace& deeper = g.lcs[layer]; // n^{layer+1}
                        for (int s : matching[bi])
                            av.push_back(g.source.bracket(gen, g.rep_of_index(s)));
                        std::vector<Vec> bv;
                        for (int r = 0; r < deeper.dim(); ++r)
                            bv.push_back(g.source.bracket(gen, deeper.basis_row(r)));
                        std::vector<Vec> all = av;
                        all.insert(all.end(), bv.begin(), bv.end());
                        int dim_a = Subspace::span(g.dim(), all).dim();
                        int dim_b = Subspace::span(g.dim(), bv).dim();
                        int rmin = dim_a - dim_b;
                        int rmax = std::min(d, dim_a);
                        if (rmin > 0 && rmax < d) {
                            ok = false;
                            fail = want_witness ? json{{"type", "intertwiner-rank"},
                                                       {"layer", layer},
                                                       {"block_dim", d},
                                                       {"rank_min", rmin},
                                                       {"rank_max", rmax},
                                                       {"trivial_slot", zero_slot + 1},
                                                       {"chain", chain}}
                                                : json{{"type", "intertwiner-rank"}};
                        }
                    }
                    if (ok) {
                        layer_ok = true;
                        break;
                    }
                }
                if (!layer_ok) return fail;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> materialize_distributions(const std::vector<int>& pool_sorted) {
    std::vector<std::vector<int>> out;
    std::vector<int> p = pool_sorted;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ScanContext make_context(const GradedAlgebra& graded, const IrrepAssignment& assignment,
                         bool trivial_check, json rebase_info) {
    ScanContext ctx{&graded, &assignment, {}, {}, trivial_check, std::move(rebase_info)};
    for (const auto& [jk, rhs] : graded.table.entries())
        ctx.entries.push_back({jk.first, jk.second, rhs});
    std::stable_sort(ctx.entries.begin(), ctx.entries.end(), [&](const auto& x, const auto& y) {
        int dx = graded.layer_of_index[x.a] + graded.layer_of_index[x.b];
        int dy = graded.layer_of_index[y.a] + graded.layer_of_index[y.b];
        return dx < dy;
    });
    for (const auto& irreps : assignment.per_layer)
        ctx.layer_multisets.push_back(layer_weight_multiset(irreps));
    return ctx;
}

struct ScanOutcome {
    bool found_survivor = false;
    json survivor;
    std::vector<json> contradictions;
    long checked = 0;
};

// Serial reference scan; the parallel variant must agree with it exactly,
// including the deterministic "first survivor by index" rule.
ScanOutcome scan_serial(const ScanContext& ctx, const std::vector<std::vector<int>>& dists,
                        int max_witnesses) {
    ScanOutcome out;
    for (size_t i = 0; i < dists.size(); ++i) {
        auto bad = check_distribution(ctx, dists[i], static_cast<int>(i) < max_witnesses);
        ++out.checked;
        if (!bad) {
            out.found_survivor = true;
            out.survivor = json{{"weights", dists[i]}, {"rebase", ctx.rebase_info}};
            return out;
        }
        if (static_cast<int>(i) < max_witnesses)
            out.contradictions.push_back(json{{"weights", dists[i]}, {"detail", *bad}});
    }
    return out;
}

ScanOutcome scan_parallel(const ScanContext& ctx, const std::vector<std::vector<int>>& dists,
                          int max_witnesses) {
#ifndef _OPENMP
    return scan_serial(ctx, dists, max_witnesses);
#else
    long n = static_cast<long>(dists.size());
    std::vector<std::optional<json>> results(dists.size());
    std::atomic<long> first_survivor{n};
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        if (i > first_survivor.load(std::memory_order_relaxed)) continue;
        auto bad = check_distribution(ctx, dists[i], i < max_witnesses);
        if (!bad) {
            long cur = first_survivor.load(std::memory_order_relaxed);
            while (i < cur && !first_survivor.compare_exchange_weak(cur, i)) {
            }
        } else {
            results[i] = std::move(bad);
        }
    }
    ScanOutcome out;
    long s = first_survivor.load();
    if (s < n) {
        out.checked = s + 1;
        out.found_survivor = true;
        out.survivor = json{{"weights", dists[s]}, {"rebase", ctx.rebase_info}};
        return out;
    }
    out.checked = n;
    for (long i = 0; i < n && i < max_witnesses; ++i)
        out.contradictions.push_back(json{{"weights", dists[i]}, {"detail", *results[i]}});
    return out;
#endif
}

} // namespace

WeightScreenResult weight_screen(const GradedAlgebra& graded, const IrrepAssignment& assignment,
                                 const WeightScreenOptions& opts) {
    int K = graded.layers();
    if (static_cast<int>(assignment.per_layer.size()) != K)
        throw dimension_error("weight_screen: assignment layer count mismatch");
    for (int k = 0; k < K; ++k) {
        int sum = 0;
        for (int d : assignment.per_layer[k]) sum += d;
        if (sum != graded.layer_dims[k])
            throw dimension_error("weight_screen: assignment layer sum mismatch");
    }

    WeightScreenResult res;
    std::vector<int> pool = layer_weight_multiset(assignment.per_layer[0]);
    long total = count_distinct_permutations(pool, opts.max_distributions);

    // the rank check applies only when the weight-0 slot is unique in layer 1
    // and is forced to carry the trivial irrep
    int zero_mult = static_cast<int>(std::count(pool.begin(), pool.end(), 0));
    bool has_trivial = std::find(assignment.per_layer[0].begin(), assignment.per_layer[0].end(),
                                 1) != assignment.per_layer[0].end();
    bool trivial_check = has_trivial && zero_mult == 1;
    if (has_trivial && zero_mult > 1)
        res.annotations.push_back(
            "intertwiner rank check skipped: layer-1 weight-0 multiplicity exceeds 1 "
            "(reduced screen strength)");

    if (total > opts.max_distributions) {
        res.verdict = WeightVerdict::undecided;
        res.witness = json{{"reason", "distribution budget exceeded"},
                           {"budget", opts.max_distributions}};
        return res;
    }
    auto dists = materialize_distributions(pool);

    ScanContext base = make_context(graded, assignment, trivial_check, nullptr);
    auto run = [&](const ScanContext& ctx, const std::vector<std::vector<int>>& ds) {
        return opts.parallel ? scan_parallel(ctx, ds, opts.max_witnesses)
                             : scan_serial(ctx, ds, opts.max_witnesses);
    };
    ScanOutcome out = run(base, dists);
    res.distributions_checked = out.checked;
    if (out.found_survivor) {
        res.verdict = WeightVerdict::consistent;
        res.witness = json{{"survivor", out.survivor}};
        return res;
    }

    json all = json::array();
    for (auto& c : out.contradictions) all.push_back(std::move(c));
    long rebases_tried = 0;

    // every fixed-basis distribution contradicts; when weights can tie inside
    // layer 1, probe mixed bases before claiming a contradiction
    bool has_tie = std::adjacent_find(pool.begin(), pool.end()) != pool.end();
    if (has_tie) {
        int m1 = graded.layer_dims[0];
        struct Mix {
            const char* name;
            int kind;
        };
        const Mix mixes[] = {{"ei+ej,ej", 0}, {"ei,ej+ei", 1}, {"ei+ej,ei-ej", 2}};
        std::vector<GradedAlgebra> rebased_store;
        for (int i = 0; i < m1 && res.verdict != WeightVerdict::consistent; ++i) {
            for (int j = i + 1; j < m1; ++j) {
                for (const Mix& mix : mixes) {
                    if (res.distributions_checked + static_cast<long>(dists.size()) >
                        opts.max_distributions) {
                        res.verdict = WeightVerdict::undecided;
                        res.witness = json{{"reason", "distribution budget exceeded during re-base probes"},
                                           {"budget", opts.max_distributions}};
                        return res;
                    }
                    std::vector<Mat> reps = graded.layer_reps;
                    Vec ri = reps[0].row(i), rj = reps[0].row(j);
                    Vec a = ri, b = rj;
                    if (mix.kind == 0) {
                        vec_add_scaled(a, 1, rj);
                    } else if (mix.kind == 1) {
                        vec_add_scaled(b, 1, ri);
                    } else {
                        vec_add_scaled(a, 1, rj);
                        b = ri;
                        vec_add_scaled(b, -1, rj);
                    }
                    reps[0].set_row(i, a);
                    reps[0].set_row(j, b);
                    rebased_store.push_back(graded_from_reps(graded.source, graded.lcs, reps));
                    const GradedAlgebra& rg = rebased_store.back();
                    ScanContext ctx = make_context(
                        rg, assignment, trivial_check,
                        json{{"pair", {i + 1, j + 1}}, {"mix", mix.name}});
                    ScanOutcome probe = run(ctx, dists);
                    res.distributions_checked += probe.checked;
                    ++rebases_tried;
                    if (probe.found_survivor) {
                        res.verdict = WeightVerdict::consistent;
                        res.witness = json{{"survivor", probe.survivor}};
                        res.annotations.push_back(
                            "survivor found only under a mixed-basis probe");
                        return res;
                    }
                }
            }
        }
    }

    res.verdict = WeightVerdict::contradiction;
    res.witness = json{{"distributions", all},
                       {"total", total},
                       {"rebases_tried", rebases_tried}};
    return res;
}

} // namespace nilrad
