#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrad/structure_table.hpp"

namespace nilrad {

enum class Provenance { literature, family, external };

struct CatalogEntry {
    std::string id;
    StructureTable table;
    Provenance provenance = Provenance::literature;
    std::string source_note;
    // family metadata for report annotations; nullopt for one-off entries
    std::optional<std::string> family;
    int family_param = 0;
};

std::string provenance_name(Provenance p);

// Fixed ids of the built-in literature entries, in catalog order.
const std::vector<std::string>& catalog_ids();

// Looks up a literature id ("A_5_3", "A_6_14p", ...) or a family instance
// ("abelian(4)", "heisenberg(2)", "filiform(6)", "t(4)"). Throws
// not_found_error with the available ids otherwise.
CatalogEntry catalog_lookup(const std::string& id);

// Text wire format:
//   dim <n>
//   bracket <j> <k> : <l1> <c1>[, <l2> <c2> ...]    (j < k, 1-based)
// '#' starts a comment, blank lines are ignored, coefficients are integers
// or p/q. The parsed table is Jacobi-validated; a violation aborts with the
// offending triple in the message.
StructureTable parse_algebra_text(const std::string& text);

// Same parse without the Jacobi check; `check` uses it to report every
// violated triple instead of aborting at the first one.
StructureTable parse_algebra_text_unchecked(const std::string& text);

std::string serialize_algebra(const StructureTable& table);

} // namespace nilrad
