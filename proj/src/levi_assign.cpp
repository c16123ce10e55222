#include <algorithm>
#include <functional>

#include "nilrad/errors.hpp"
#include "nilrad/levi.hpp"

namespace nilrad {

std::string factor_name(LeviFactor f) { return f == LeviFactor::sl2 ? "sl2" : "so3"; }

std::vector<int> sl2_tensor_irreps(int a, int b, TensorPart part) {
    if (a < 1 || b < 1) throw error("tensor factors must have dimension >= 1");
    std::vector<int> out;
    if (part == TensorPart::full) {
        for (int d = a + b - 1; d >= std::abs(a - b) + 1; d -= 2) out.push_back(d);
        return out;
    }
    if (a != b) throw error("antisymmetric part requires equal factors");
    for (int d = 2 * a - 3; d >= 1; d -= 4) out.push_back(d);
    return out;
}

namespace {

// multisets are kept as descending sorted vectors
void insert_sorted(std::vector<int>& ms, int v) {
    ms.insert(std::upper_bound(ms.begin(), ms.end(), v, std::greater<int>()), v);
}

std::vector<int> multiset_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    for (int v : b) insert_sorted(out, v);
    return out;
}

bool multiset_contains(std::vector<int> avail, const std::vector<int>& wanted) {
    for (int v : wanted) {
        auto it = std::find(avail.begin(), avail.end(), v);
        if (it == avail.end()) return false;
        avail.erase(it);
    }
    return true;
}

// all descending multisets of positive integers with the given sum
std::vector<std::vector<int>> partitions(int sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(sum, sum);
    return out;
}

// quaternionic pairing: complexified so(3) layers need every even dimension
// with even multiplicity
bool so3_admissible(const std::vector<int>& ms) {
    for (size_t i = 0; i < ms.size();) {
        size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if (ms[i] % 2 == 0 && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

bool faithful_layer1(const std::vector<int>& ms) {
    return !ms.empty() && ms.front() >= 2;
}

std::vector<int> available_for_layer2(const std::vector<int>& layer1) {
    std::vector<int> avail;
    for (size_t i = 0; i < layer1.size(); ++i) {
        avail = multiset_union(avail, sl2_tensor_irreps(layer1[i], layer1[i], TensorPart::antisymmetric));
        for (size_t j = i + 1; j < layer1.size(); ++j)
            avail = multiset_union(avail, sl2_tensor_irreps(layer1[i], layer1[j], TensorPart::full));
    }
    return avail;
}

std::vector<int> available_for_deeper(const std::vector<int>& prev, const std::vector<int>& layer1) {
    std::vector<int> avail;
    for (int a : prev)
        for (int b : layer1) avail = multiset_union(avail, sl2_tensor_irreps(a, b, TensorPart::full));
    return avail;
}

} // namespace

std::vector<IrrepAssignment> enumerate_irrep_assignments(const GradedAlgebra& graded,
                                                         LeviFactor factor,
                                                         std::vector<AssignmentDeadEnd>* dead_ends) {
    const std::vector<int>& m = graded.layer_dims;
    int K = static_cast<int>(m.size());
    std::vector<IrrepAssignment> out;
    std::vector<std::vector<int>> chosen;

    std::function<void(int)> rec = [&](int layer) {
        if (layer > K) {
            out.push_back({factor, chosen});
            return;
        }
        std::vector<int> avail;
        bool restricted = layer >= 2;
        if (layer == 2)
            avail = available_for_layer2(chosen[0]);
        else if (layer >= 3)
            avail = available_for_deeper(chosen[layer - 2], chosen[0]);
        bool any = false;
        for (const auto& cand : partitions(m[layer - 1])) {
            if (factor == LeviFactor::so3 && !so3_admissible(cand)) continue;
            if (layer == 1 && !faithful_layer1(cand)) continue;
            if (restricted && !multiset_contains(avail, cand)) continue;
            any = true;
            chosen.push_back(cand);
            rec(layer + 1);
            chosen.pop_back();
        }
        if (!any && dead_ends && dead_ends->size() < 16)
            dead_ends->push_back({layer, m[layer - 1], avail, chosen});
    };
    rec(1);
    return out;
}

std::vector<IrrepAssignment> enumerate_irrep_assignments(const GradedAlgebra& graded,
                                                         LeviFactor factor) {
    return enumerate_irrep_assignments(graded, factor, nullptr);
}

} // namespace nilrad
