#include "nilrad/report.hpp"

#include <sstream>

namespace nilrad {

namespace {

std::string series_label(SeriesKind kind) {
    switch (kind) {
    case SeriesKind::derived:
        return "derived";
    case SeriesKind::lower_central:
        return "lower central";
    default:
        return "upper central";
    }
}

json dims_json(const StructureTable& table) {
    SeriesChain lc = characteristic_series(table, SeriesKind::lower_central);
    json j;
    j["n"] = table.dim();
    j["n2"] = lc.terms.size() > 1 ? lc.terms[1].dim() : 0;
    if (lc.reaches_zero()) {
        std::vector<int> layers;
        for (size_t k = 0; k + 1 < lc.terms.size(); ++k)
            layers.push_back(lc.terms[k].dim() - lc.terms[k + 1].dim());
        j["layers"] = layers;
    } else {
        j["layers"] = nullptr;
    }
    return j;
}

json flag_json(const CharacteristicFlag& flag) {
    json chain = json::array();
    for (const auto& m : flag.chain)
        chain.push_back(json{{"dim", m.space.dim()}, {"recipe", m.recipe}});
    return json{{"complete", flag.is_complete}, {"chain", chain}};
}

std::string flag_text(const CharacteristicFlag& flag) {
    std::ostringstream out;
    out << (flag.is_complete ? "complete" : "incomplete") << "  ";
    for (size_t i = 0; i < flag.chain.size(); ++i) {
        if (i) out << " < ";
        out << flag.chain[i].recipe << "(" << flag.chain[i].space.dim() << ")";
    }
    return out.str();
}

} // namespace

std::vector<std::string> bound_annotations(const CatalogEntry& entry) {
    std::vector<std::string> notes;
    if (entry.family == "heisenberg") {
        int m = entry.family_param;
        int dim = 2 * m + 1;
        notes.push_back("heisenberg nilradical: the attained maximum of non-nilpotent "
                        "generators is (dim+1)/2 = " +
                        std::to_string((dim + 1) / 2) + "; the bound " + std::to_string(2 * m) +
                        (m == 1 ? " is saturated" : " is not saturated"));
    }
    return notes;
}

json full_report_json(const CatalogEntry& entry, const ScreenReport& screen) {
    json j;
    j["algebra"] = entry.id.empty() ? "(file)" : entry.id;
    j["dims"] = dims_json(entry.table);
    j["bound"] = is_nilpotent(entry.table) ? json(solvable_extension_bound(entry.table)) : json();
    for (const auto& rule : screen.rules) {
        if (rule.rule == "characteristic-flag") {
            j["flag"] = json{{"complete", rule.verdict == Verdict::excluded},
                             {"chain", rule.witness["chain"]}};
        }
    }
    json screens = json::array();
    for (const auto& rule : screen.rules) {
        if (rule.rule == "characteristic-flag") continue;
        screens.push_back(json{{"factor", rule.factor},
                               {"rule", rule.rule},
                               {"verdict", verdict_name(rule.verdict)},
                               {"witness", rule.witness}});
    }
    j["screens"] = screens;
    j["overall"] = verdict_name(screen.overall);
    j["fired"] = screen.fired;
    json notes = json::array();
    for (const auto& a : screen.annotations) notes.push_back(a);
    for (const auto& a : bound_annotations(entry)) notes.push_back(a);
    j["annotations"] = notes;
    return j;
}

std::string render_screen(const CatalogEntry& entry, const ScreenReport& screen,
                          ReportFormat fmt) {
    if (fmt == ReportFormat::json_format) return full_report_json(entry, screen).dump(2) + "\n";
    std::ostringstream out;
    out << "algebra " << (entry.id.empty() ? "(file)" : entry.id) << "  dim " << entry.table.dim()
        << "\n";
    json dims = dims_json(entry.table);
    out << "dim n^2: " << dims["n2"] << "   layers:";
    if (dims["layers"].is_array())
        for (const auto& m : dims["layers"]) out << " " << m;
    out << "\n";
    if (is_nilpotent(entry.table))
        out << "solvable extension bound: " << solvable_extension_bound(entry.table) << "\n";
    for (const auto& rule : screen.rules) {
        if (rule.rule == "characteristic-flag") {
            out << "flag: " << (rule.verdict == Verdict::excluded ? "complete (excludes)"
                                                                  : "incomplete (no verdict)");
            out << "  chain: ";
            bool first = true;
            for (const auto& m : rule.witness["chain"]) {
                if (!first) out << " < ";
                out << m["recipe"].get<std::string>() << "(" << m["dim"] << ")";
                first = false;
            }
            out << "\n";
        } else {
            out << "screen " << rule.factor << " [" << rule.rule
                << "]: " << verdict_name(rule.verdict) << "\n";
        }
    }
    out << "overall: " << verdict_name(screen.overall);
    if (!screen.fired.empty()) out << "  (fired: " << screen.fired << ")";
    out << "\n";
    for (const auto& a : screen.annotations) out << "note: " << a << "\n";
    for (const auto& a : bound_annotations(entry)) out << "note: " << a << "\n";
    return out.str();
}

std::string render_info(const CatalogEntry& entry, ReportFormat fmt) {
    const StructureTable& t = entry.table;
    SeriesChain lc = characteristic_series(t, SeriesKind::lower_central);
    SeriesChain dc = characteristic_series(t, SeriesKind::derived);
    bool nil = lc.reaches_zero();
    DerivationSpace der = derivation_space(t);
    if (fmt == ReportFormat::json_format) {
        json j;
        j["algebra"] = entry.id.empty() ? "(file)" : entry.id;
        j["provenance"] = provenance_name(entry.provenance);
        j["source_note"] = entry.source_note;
        j["dims"] = dims_json(t);
        j["nilpotent"] = nil;
        j["solvable"] = dc.reaches_zero();
        j["abelian"] = is_abelian(t);
        if (nil) {
            j["nilindex"] = nilindex(t);
            j["bound"] = solvable_extension_bound(t);
        }
        j["lower_central_dims"] = lc.dims();
        j["derived_dims"] = dc.dims();
        j["upper_central_dims"] = characteristic_series(t, SeriesKind::upper_central).dims();
        j["derivations"] =
            json{{"total", der.dim_total}, {"inner", der.dim_inner}, {"outer", der.dim_outer}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "algebra " << (entry.id.empty() ? "(file)" : entry.id) << "  dim " << t.dim() << "  ["
        << provenance_name(entry.provenance) << "]\n";
    if (!entry.source_note.empty()) out << "  " << entry.source_note << "\n";
    out << "nilpotent: " << (nil ? "yes" : "no") << "   solvable: "
        << (dc.reaches_zero() ? "yes" : "no") << "   abelian: " << (is_abelian(t) ? "yes" : "no")
        << "\n";
    out << "lower central dims:";
    for (int d : lc.dims()) out << " " << d;
    out << "\n";
    if (nil) {
        out << "nilindex: " << nilindex(t) << "\n";
        out << "solvable extension bound: " << solvable_extension_bound(t) << "\n";
    }
    out << "derivations: total " << der.dim_total << ", inner " << der.dim_inner << ", outer "
        << der.dim_outer << "\n";
    for (const auto& a : bound_annotations(entry)) out << "note: " << a << "\n";
    return out.str();
}

std::string render_series(const CatalogEntry& entry, SeriesKind kind, ReportFormat fmt) {
    SeriesChain chain = characteristic_series(entry.table, kind);
    if (fmt == ReportFormat::json_format) {
        json terms = json::array();
        for (const auto& t : chain.terms) {
            json rows = json::array();
            for (int r = 0; r < t.dim(); ++r) {
                json row = json::array();
                for (const auto& x : t.basis_row(r)) row.push_back(to_string(x));
                rows.push_back(row);
            }
            terms.push_back(json{{"dim", t.dim()}, {"basis", rows}});
        }
        return json{{"algebra", entry.id.empty() ? "(file)" : entry.id},
                    {"kind", series_label(kind)},
                    {"dims", chain.dims()},
                    {"terms", terms}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream out;
    out << series_label(kind) << " series dims:";
    for (int d : chain.dims()) out << " " << d;
    out << "\n";
    return out.str();
}

std::string render_derivations(const CatalogEntry& entry, ReportFormat fmt) {
    DerivationSpace der = derivation_space(entry.table);
    if (fmt == ReportFormat::json_format) {
        json basis = json::array();
        for (const auto& d : der.basis) {
            json m = json::array();
            for (int r = 0; r < d.rows; ++r) {
                json row = json::array();
                for (int c = 0; c < d.cols; ++c) row.push_back(to_string(d.at(r, c)));
                m.push_back(row);
            }
            basis.push_back(m);
        }
        return json{{"algebra", entry.id.empty() ? "(file)" : entry.id},
                    {"total", der.dim_total},
                    {"inner", der.dim_inner},
                    {"outer", der.dim_outer},
                    {"basis", basis}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream out;
    out << "derivation algebra: total " << der.dim_total << ", inner " << der.dim_inner
        << ", outer " << der.dim_outer << "\n";
    return out.str();
}

std::string render_bound(const CatalogEntry& entry, ReportFormat fmt) {
    int bound = solvable_extension_bound(entry.table);
    auto notes = bound_annotations(entry);
    if (fmt == ReportFormat::json_format) {
        json j{{"algebra", entry.id.empty() ? "(file)" : entry.id},
               {"bound", bound},
               {"annotations", notes}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "solvable extension bound (dim n - dim n^2): " << bound << "\n";
    for (const auto& a : notes) out << "note: " << a << "\n";
    return out.str();
}

std::string render_flag(const CatalogEntry& entry, ReportFormat fmt) {
    CharacteristicFlag flag = build_characteristic_flag(entry.table);
    if (fmt == ReportFormat::json_format) {
        return json{{"algebra", entry.id.empty() ? "(file)" : entry.id},
                    {"flag", flag_json(flag)}}
                   .dump(2) +
               "\n";
    }
    return "flag: " + flag_text(flag) + "\n";
}

std::string render_validation(const StructureTable& table, const ValidationResult& result,
                              ReportFormat fmt) {
    if (fmt == ReportFormat::json_format) {
        json v = json::array();
        for (const auto& viol : result.violations) {
            json defect = json::array();
            for (const auto& x : viol.defect) defect.push_back(to_string(x));
            v.push_back(json{{"triple", {viol.j + 1, viol.k + 1, viol.l + 1}}, {"defect", defect}});
        }
        return json{{"ok", result.ok}, {"violations", v}}.dump(2) + "\n";
    }
    std::ostringstream out;
    if (result.ok) {
        out << "ok: Jacobi identity holds on all " << table.dim() << "-basis triples\n";
    } else {
        out << "invalid: " << result.violations.size() << " violated triple(s)\n";
        for (const auto& viol : result.violations)
            out << "  (" << viol.j + 1 << "," << viol.k + 1 << "," << viol.l + 1 << ") defect "
                << vec_to_string(viol.defect) << "\n";
    }
    return out.str();
}

} // namespace nilrad
