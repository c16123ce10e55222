#include <algorithm>
#include <map>

#include "nilrad/errors.hpp"
#include "nilrad/levi.hpp"

namespace nilrad {

namespace {

// recipe preference when several constructions give the same subspace:
// trivial names, lower central, derived, upper central, centralizer, rel
int recipe_rank(const std::string& r) {
    if (r == "0" || r == "n") return 0;
    if (r.rfind("n^", 0) == 0) return 1;
    if (r.rfind("g^", 0) == 0) return 2;
    if (r.rfind("z_", 0) == 0) return 3;
    if (r.rfind("cent(", 0) == 0) return 4;
    return 5;
}

struct CandidateSet {
    std::vector<FlagMember> members;
    std::map<Subspace, int> index;

    bool add(const Subspace& s, const std::string& recipe) {
        auto it = index.find(s);
        if (it != index.end()) {
            if (recipe_rank(recipe) < recipe_rank(members[it->second].recipe))
                members[it->second].recipe = recipe;
            return false;
        }
        index[s] = static_cast<int>(members.size());
        members.push_back({s, recipe});
        return true;
    }
};

} // namespace

CharacteristicFlag build_characteristic_flag(const StructureTable& table) {
    int n = table.dim();
    CandidateSet set;
    set.add(Subspace::zero(n), "0");
    set.add(Subspace::full(n), "n");

    SeriesChain lower = characteristic_series(table, SeriesKind::lower_central);
    for (size_t k = 1; k < lower.terms.size(); ++k)
        set.add(lower.terms[k], "n^" + std::to_string(k + 1));
    SeriesChain derived = characteristic_series(table, SeriesKind::derived);
    for (size_t k = 1; k < derived.terms.size(); ++k)
        set.add(derived.terms[k], "g^(" + std::to_string(k) + ")");
    SeriesChain upper = characteristic_series(table, SeriesKind::upper_central);
    for (size_t k = 0; k < upper.terms.size(); ++k)
        set.add(upper.terms[k], "z_" + std::to_string(k + 1));

    // close under centralizers and relative ideals; every output is again
    // characteristic because the inputs are
    for (int round = 0; round < 64; ++round) {
        std::vector<FlagMember> snapshot = set.members;
        bool grew = false;
        for (const auto& h : snapshot) {
            if (h.space.dim() == 0 || h.space.dim() == n) continue;
            grew |= set.add(centralizer(table, h.space), "cent(" + h.recipe + ")");
        }
        for (const auto& i : snapshot) {
            if (i.space.dim() == 0) continue;
            for (const auto& j : snapshot) {
                if (j.space.dim() == n) continue;
                Subspace rel = relative_ideal(table, i.space, j.space);
                grew |= set.add(rel, "rel(" + i.recipe + ", " + j.recipe + ")");
            }
        }
        if (!grew) break;
    }

    // longest containment chain from 0 to n
    std::vector<int> order(set.members.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (set.members[a].space.dim() != set.members[b].space.dim())
            return set.members[a].space.dim() < set.members[b].space.dim();
        return set.members[a].space < set.members[b].space;
    });
    int m = static_cast<int>(order.size());
    std::vector<int> best(m, 1), prev(m, -1);
    for (int bi = 0; bi < m; ++bi) {
        for (int ai = 0; ai < bi; ++ai) {
            const Subspace& a = set.members[order[ai]].space;
            const Subspace& b = set.members[order[bi]].space;
            if (a.dim() >= b.dim() || !b.contains(a)) continue;
            if (best[ai] + 1 > best[bi]) {
                best[bi] = best[ai] + 1;
                prev[bi] = ai;
            }
        }
    }
    int end = m - 1; // full space sorts last
    CharacteristicFlag flag;
    std::vector<int> path;
    for (int cur = end; cur != -1; cur = prev[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    for (int idx : path) flag.chain.push_back(set.members[order[idx]]);
    flag.is_complete = static_cast<int>(flag.chain.size()) == n + 1;
    flag.candidates = set.members;
    return flag;
}

bool flag_excludes(const CharacteristicFlag& flag) { return flag.is_complete; }

} // namespace nilrad
