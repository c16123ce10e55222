#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilrad/errors.hpp"
#include "nilrad/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nilrad;

namespace {

// Resolves a positional argument as a catalog id or, failing that, a path.
CatalogEntry load_target(const std::string& target) {
    try {
        return catalog_lookup(target);
    } catch (const not_found_error& miss) {
        std::ifstream in(target);
        if (!in) {
            if (target.find('/') != std::string::npos || target.find('.') != std::string::npos)
                throw not_found_error("cannot open file: " + target);
            throw;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        CatalogEntry e{"", parse_algebra_text(buf.str()), Provenance::external,
                       "loaded from " + target, std::nullopt, 0};
        e.id = target;
        return e;
    }
}

ScreenOptions screen_options(const std::string& factor, long max_distributions) {
    ScreenOptions opts;
    opts.run_sl2 = factor == "sl2" || factor == "all";
    opts.run_so3 = factor == "so3" || factor == "all";
    opts.weights.max_distributions = max_distributions;
    return opts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure analysis of nilpotent Lie algebras: characteristic series, "
                 "derivations, solvable extension bounds and Levi extension screens"};
    app.require_subcommand(1);

    bool json_out = false;
    long max_distributions = 100000;
    app.add_flag("--json", json_out, "emit JSON instead of text");
    app.add_option("--max-distributions", max_distributions,
                   "weight screen distribution budget (verdicts degrade to 'undecided' past it)");

    std::string target, kind = "lower", factor = "all";
    bool screen_all = false;

    auto* info = app.add_subcommand("info", "summary of one algebra");
    info->add_option("target", target, "catalog id or file")->required();

    auto* series = app.add_subcommand("series", "characteristic series");
    series->add_option("target", target, "catalog id or file")->required();
    series->add_option("--kind", kind, "derived | lower | upper")
        ->check(CLI::IsMember({"derived", "lower", "upper"}));

    auto* derivs = app.add_subcommand("derivations", "derivation algebra dimensions and basis");
    derivs->add_option("target", target, "catalog id or file")->required();

    auto* bound = app.add_subcommand("bound", "upper bound on solvable extension generators");
    bound->add_option("target", target, "catalog id or file")->required();

    auto* flag = app.add_subcommand("flag", "characteristic flag criterion");
    flag->add_option("target", target, "catalog id or file")->required();

    auto* screen = app.add_subcommand("screen", "Levi extension obstruction screens");
    screen->add_option("target", target, "catalog id or file");
    screen->add_option("--factor", factor, "sl2 | so3 | all (rank-1 factors only)")
        ->check(
            [](const std::string& f) {
                if (f == "sl2" || f == "so3" || f == "all") return std::string();
                return "unsupported factor '" + f + "': only the rank-1 factors sl2 and so3 are screened";
            },
            "FACTOR");
    screen->add_flag("--all", screen_all, "screen every catalog entry");

    auto* catalog = app.add_subcommand("catalog", "built-in algebra catalog");
    auto* catalog_list = catalog->add_subcommand("list", "list catalog ids");
    auto* catalog_show = catalog->add_subcommand("show", "print one entry in the wire format");
    catalog_show->add_option("id", target, "catalog id")->required();
    catalog->require_subcommand(1);

    auto* check = app.add_subcommand("check", "parse a file and verify the Jacobi identity");
    check->add_option("file", target, "algebra file")->required();

    for (auto* sc : app.get_subcommands({})) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ReportFormat fmt = json_out ? ReportFormat::json_format : ReportFormat::text;

    try {
        if (*info) {
            std::cout << render_info(load_target(target), fmt);
        } else if (*series) {
            SeriesKind sk = kind == "derived" ? SeriesKind::derived
                            : kind == "upper" ? SeriesKind::upper_central
                                              : SeriesKind::lower_central;
            std::cout << render_series(load_target(target), sk, fmt);
        } else if (*derivs) {
            std::cout << render_derivations(load_target(target), fmt);
        } else if (*bound) {
            std::cout << render_bound(load_target(target), fmt);
        } else if (*flag) {
            std::cout << render_flag(load_target(target), fmt);
        } else if (*screen) {
            ScreenOptions opts = screen_options(factor, max_distributions);
            if (screen_all) {
                const auto& ids = catalog_ids();
                std::vector<std::string> outputs(ids.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
                for (long i = 0; i < static_cast<long>(ids.size()); ++i) {
                    CatalogEntry entry = catalog_lookup(ids[i]);
                    ScreenReport rep = levi_screen(entry.table, opts, entry.id);
                    outputs[i] = render_screen(entry, rep, fmt);
                }
                for (const auto& s : outputs) std::cout << s << (json_out ? "" : "\n");
            } else {
                if (target.empty()) {
                    std::cerr << "error: screen needs a target or --all\n";
                    return 2;
                }
                CatalogEntry entry = load_target(target);
                ScreenReport rep = levi_screen(entry.table, opts, entry.id);
                std::cout << render_screen(entry, rep, fmt);
            }
        } else if (*catalog) {
            if (*catalog_list) {
                for (const auto& id : catalog_ids()) {
                    CatalogEntry e = catalog_lookup(id);
                    std::cout << id << "  dim " << e.table.dim() << "  ["
                              << provenance_name(e.provenance) << "]"
                              << (e.source_note.empty() ? "" : "  " + e.source_note) << "\n";
                }
                std::cout << "abelian(n), heisenberg(m), filiform(n), t(n)  [family]\n";
            } else if (*catalog_show) {
                CatalogEntry e = catalog_lookup(target);
                std::cout << "# " << e.id << "  [" << provenance_name(e.provenance) << "] "
                          << e.source_note << "\n"
                          << serialize_algebra(e.table);
            }
        } else if (*check) {
            std::ifstream in(target);
            if (!in) throw parse_error(0, "cannot open file: " + target);
            std::stringstream buf;
            buf << in.rdbuf();
            StructureTable table = parse_algebra_text_unchecked(buf.str());
            ValidationResult result = validate_lie_algebra(table);
            std::cout << render_validation(table, result, fmt);
            if (!result.ok) return 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_found_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
