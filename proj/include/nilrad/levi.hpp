#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilrad/series.hpp"

namespace nilrad {

using json = nlohmann::json;

struct FlagMember {
    Subspace space;
    std::string recipe;
};

// Containment chain of characteristic subspaces from 0 to the full algebra,
// the longest one refinable from the seeded-and-closed candidate set.
struct CharacteristicFlag {
    std::vector<FlagMember> chain;
    bool is_complete = false;          // all consecutive codimensions equal 1
    std::vector<FlagMember> candidates; // the whole closed candidate set
};

// Seeds with all derived / lower central / upper central terms, then closes
// under centralizers and relative ideals of pairs until a fixpoint.
CharacteristicFlag build_characteristic_flag(const StructureTable& table);

// A complete flag rules out every Levi extension acting nontrivially on the
// algebra; an incomplete one decides nothing.
bool flag_excludes(const CharacteristicFlag& flag);

enum class LeviFactor { sl2, so3 };
enum class TensorPart { full, antisymmetric };

std::string factor_name(LeviFactor f);

// Irreducible pieces (by dimension, descending) of the tensor square of
// sl(2) irreps: full a x b, or the antisymmetric part when a = b.
std::vector<int> sl2_tensor_irreps(int a, int b, TensorPart part);

// Hypothetical decomposition of each graded layer into irreducible
// dimensions over C. so(3) assignments are expressed through their
// complexification, with even dimensions forced into pairs.
struct IrrepAssignment {
    LeviFactor factor;
    std::vector<std::vector<int>> per_layer; // descending multisets, one per layer
};

std::vector<IrrepAssignment> enumerate_irrep_assignments(const GradedAlgebra& graded,
                                                         LeviFactor factor);

// Diagnostics for an empty enumeration: deepest dead ends reached.
struct AssignmentDeadEnd {
    int layer = 0;                        // 1-based layer that could not be filled
    int required_sum = 0;                 // m_layer
    std::vector<int> available;           // tensor-rule multiset available there
    std::vector<std::vector<int>> parent; // layers chosen so far
};

std::vector<IrrepAssignment> enumerate_irrep_assignments(const GradedAlgebra& graded,
                                                         LeviFactor factor,
                                                         std::vector<AssignmentDeadEnd>* dead_ends);

enum class WeightVerdict { consistent, contradiction, undecided };

struct WeightScreenOptions {
    long max_distributions = 100000;
    bool parallel = true;
    int max_witnesses = 64;
};

struct WeightScreenResult {
    WeightVerdict verdict = WeightVerdict::undecided;
    json witness;                       // surviving distribution or contradiction list
    std::vector<std::string> annotations;
    long distributions_checked = 0;
};

// Cartan weight propagation on the graded algebra. Weight multisets of the
// assignment's layer-1 irreps are distributed over the graded layer-1 basis
// (all permutations, plus mixing probes for weight-tied slots), propagated
// additively through all graded brackets, and checked against every layer's
// assigned multiset; a uniquely determined trivial layer-1 slot additionally
// triggers the intertwiner rank check against the filtered brackets.
WeightScreenResult weight_screen(const GradedAlgebra& graded, const IrrepAssignment& assignment,
                                 const WeightScreenOptions& opts = {});

enum class Verdict { excluded, not_excluded, undecided };

std::string verdict_name(Verdict v);

struct ScreenRule {
    std::string rule;   // "characteristic-flag" | "irrep-assignment" | "weight-screen"
    std::string factor; // "any" for the flag, else "sl2" / "so3"
    Verdict verdict = Verdict::not_excluded;
    json witness;
};

struct ScreenReport {
    std::string algebra_id;
    std::vector<ScreenRule> rules;
    Verdict overall = Verdict::not_excluded;
    std::string fired; // first excluding rule, empty if none
    std::vector<std::string> annotations;
};

struct ScreenOptions {
    bool run_sl2 = true;
    bool run_so3 = true;
    WeightScreenOptions weights;
};

// Runs the flag criterion, then per-factor assignment enumeration and weight
// screens. Overall verdict is excluded iff the flag excludes or every
// requested factor is excluded; a not-excluded verdict does not assert that
// an extension exists.
ScreenReport levi_screen(const StructureTable& table, const ScreenOptions& opts = {},
                         const std::string& algebra_id = "");

} // namespace nilrad
