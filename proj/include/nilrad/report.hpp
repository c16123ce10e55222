#pragma once

#include <optional>
#include <string>

#include "nilrad/catalog.hpp"
#include "nilrad/derivations.hpp"
#include "nilrad/extensions.hpp"
#include "nilrad/levi.hpp"

namespace nilrad {

enum class ReportFormat { text, json_format };

// Annotations attached to the solvable-extension bound of a catalog entry;
// currently the Heisenberg attained maximum (dim+1)/2.
std::vector<std::string> bound_annotations(const CatalogEntry& entry);

// Full analysis report: dims, layers, bound, flag chain, screens, notes.
json full_report_json(const CatalogEntry& entry, const ScreenReport& screen);

std::string render_screen(const CatalogEntry& entry, const ScreenReport& screen, ReportFormat fmt);
std::string render_info(const CatalogEntry& entry, ReportFormat fmt);
std::string render_series(const CatalogEntry& entry, SeriesKind kind, ReportFormat fmt);
std::string render_derivations(const CatalogEntry& entry, ReportFormat fmt);
std::string render_bound(const CatalogEntry& entry, ReportFormat fmt);
std::string render_flag(const CatalogEntry& entry, ReportFormat fmt);
std::string render_validation(const StructureTable& table, const ValidationResult& result,
                              ReportFormat fmt);

} // namespace nilrad
