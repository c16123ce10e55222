#include <algorithm>

#include "nilrad/errors.hpp"
#include "nilrad/levi.hpp"

namespace nilrad {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::excluded:
        return "excluded";
    case Verdict::not_excluded:
        return "not-excluded";
    default:
        return "undecided";
    }
}

namespace {

json flag_witness(const CharacteristicFlag& flag) {
    json chain = json::array();
    for (const auto& m : flag.chain)
        chain.push_back(json{{"dim", m.space.dim()}, {"recipe", m.recipe}});
    return json{{"complete", flag.is_complete}, {"chain", chain}};
}

json assignment_json(const IrrepAssignment& a) {
    json layers = json::array();
    for (const auto& l : a.per_layer) layers.push_back(l);
    return layers;
}

} // namespace

ScreenReport levi_screen(const StructureTable& table, const ScreenOptions& opts,
                         const std::string& algebra_id) {
    if (!is_nilpotent(table))
        throw not_nilpotent_error("levi_screen: only nilpotent radicals are screened");

    ScreenReport report;
    report.algebra_id = algebra_id;

    CharacteristicFlag flag = build_characteristic_flag(table);
    report.rules.push_back({"characteristic-flag", "any",
                            flag_excludes(flag) ? Verdict::excluded : Verdict::not_excluded,
                            flag_witness(flag)});

    GradedAlgebra graded = associated_graded(table);

    std::vector<LeviFactor> factors;
    if (opts.run_sl2) factors.push_back(LeviFactor::sl2);
    if (opts.run_so3) factors.push_back(LeviFactor::so3);

    std::vector<bool> factor_excluded;
    bool any_undecided = false;

    for (LeviFactor factor : factors) {
        std::string fname = factor_name(factor);
        std::vector<AssignmentDeadEnd> dead_ends;
        auto assignments = enumerate_irrep_assignments(graded, factor, &dead_ends);
        if (factor == LeviFactor::so3)
            report.annotations.push_back(
                "so3 screened through its complexification; verdict valid over C");
        if (assignments.empty()) {
            json ends = json::array();
            for (const auto& de : dead_ends)
                ends.push_back(json{{"layer", de.layer},
                                    {"required_sum", de.required_sum},
                                    {"available", de.available},
                                    {"chosen_so_far", de.parent}});
            report.rules.push_back({"irrep-assignment", fname, Verdict::excluded,
                                    json{{"reason", "no admissible irrep assignment"},
                                         {"dead_ends", ends}}});
            factor_excluded.push_back(true);
            continue;
        }
        report.rules.push_back({"irrep-assignment", fname, Verdict::not_excluded,
                                json{{"count", assignments.size()}}});
        bool irreducible_m1 = false;
        for (const auto& a : assignments)
            if (a.per_layer[0].size() == 1) irreducible_m1 = true;
        if (irreducible_m1)
            report.annotations.push_back(
                "an assignment acts irreducibly on layer 1: over C, any Levi extension has "
                "dim r - dim n <= 1");

        bool any_consistent = false;
        bool any_budget = false;
        json per_assignment = json::array();
        json survivor;
        auto add_note = [&report](const std::string& note) {
            if (std::find(report.annotations.begin(), report.annotations.end(), note) ==
                report.annotations.end())
                report.annotations.push_back(note);
        };
        for (const auto& a : assignments) {
            WeightScreenResult w = weight_screen(graded, a, opts.weights);
            for (const auto& note : w.annotations) add_note(note);
            if (w.verdict == WeightVerdict::consistent) {
                any_consistent = true;
                survivor = json{{"assignment", assignment_json(a)}, {"witness", w.witness}};
                break;
            }
            if (w.verdict == WeightVerdict::undecided) {
                any_budget = true;
                per_assignment.push_back(
                    json{{"assignment", assignment_json(a)}, {"outcome", "undecided"},
                         {"witness", w.witness}});
            } else {
                per_assignment.push_back(
                    json{{"assignment", assignment_json(a)}, {"outcome", "contradiction"},
                         {"witness", w.witness}});
            }
        }
        if (any_consistent) {
            report.rules.push_back({"weight-screen", fname, Verdict::not_excluded, survivor});
            factor_excluded.push_back(false);
        } else if (any_budget) {
            report.rules.push_back({"weight-screen", fname, Verdict::undecided,
                                    json{{"assignments", per_assignment}}});
            factor_excluded.push_back(false);
            any_undecided = true;
        } else {
            report.rules.push_back({"weight-screen", fname, Verdict::excluded,
                                    json{{"assignments", per_assignment}}});
            factor_excluded.push_back(true);
        }
    }

    bool all_factors_excluded =
        !factor_excluded.empty() &&
        std::all_of(factor_excluded.begin(), factor_excluded.end(), [](bool b) { return b; });
    if (flag_excludes(flag) || all_factors_excluded) {
        report.overall = Verdict::excluded;
        for (const auto& r : report.rules)
            if (r.verdict == Verdict::excluded) {
                report.fired = r.rule + (r.factor == "any" ? "" : " (" + r.factor + ")");
                break;
            }
    } else if (any_undecided) {
        report.overall = Verdict::undecided;
    } else {
        report.overall = Verdict::not_excluded;
    }
    return report;
}

} // namespace nilrad
