#include "nilrad/catalog.hpp"

#include <map>

#include "nilrad/errors.hpp"

namespace nilrad {

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::literature:
        return "literature";
    case Provenance::family:
        return "family";
    default:
        return "external";
    }
}

namespace {

struct Triple {
    int j, k, l;
    long c = 1;
};

StructureTable table_from(int dim, const std::vector<Triple>& ts) {
    std::vector<BracketDef> defs;
    std::map<std::pair<int, int>, SparseVec> acc;
    for (const auto& t : ts) acc[{t.j, t.k}].emplace_back(t.l, rat(t.c));
    for (auto& [jk, rhs] : acc) defs.push_back({jk.first, jk.second, rhs});
    return StructureTable::from_brackets(dim, defs);
}

struct RawEntry {
    const char* id;
    int dim;
    std::vector<Triple> brackets;
    const char* note;
};

// Nomenclature follows the Patera-Sharp-Winternitz tables of low-dimensional
// nilpotent algebras. A_6_18 is shipped with [e2,e5]=e6: the variant with
// [e2,e4]=e6 seen in some printings fails the Jacobi identity at (1,2,3),
// while this form satisfies it and has the documented characteristic series.
const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> entries = {
        {"A_3_1", 3, {{2, 3, 1}}, "Heisenberg algebra h_1"},
        {"A_4_1", 4, {{2, 4, 1}, {3, 4, 2}}, "filiform, dimension 4"},
        {"A_5_1", 5, {{3, 5, 1}, {4, 5, 2}}, ""},
        {"A_5_2", 5, {{2, 5, 1}, {3, 5, 2}, {4, 5, 3}}, "filiform, dimension 5"},
        {"A_5_3", 5, {{3, 4, 2}, {3, 5, 1}, {4, 5, 3}}, ""},
        {"A_5_5", 5, {{3, 4, 1}, {2, 5, 1}, {3, 5, 2}}, ""},
        {"A_5_6", 5, {{2, 5, 1}, {3, 4, 1}, {3, 5, 2}, {4, 5, 3}}, ""},
        {"A_6_8", 6, {{3, 4, 2}, {3, 5, 1}, {4, 5, 3}, {4, 6, 2, -1}},
         "A_5_3 extended by e6 with [e6,e4]=e2"},
        {"A_6_9", 6, {{3, 4, 2}, {3, 5, 1}, {4, 5, 3}, {4, 6, 1, -1}},
         "A_5_3 extended by e6 with [e6,e4]=e1"},
        {"A_6_13", 6, {{1, 2, 5}, {1, 3, 4}, {1, 4, 6}, {2, 5, 6}}, ""},
        {"A_6_14p", 6, {{1, 3, 4}, {1, 4, 6}, {2, 3, 5}, {2, 5, 6, 1}}, "epsilon = +1"},
        {"A_6_14m", 6, {{1, 3, 4}, {1, 4, 6}, {2, 3, 5}, {2, 5, 6, -1}}, "epsilon = -1"},
        {"A_6_15", 6, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 6}, {2, 5, 6}},
         "[e1,e2] = e3 + e5"},
        {"A_6_18", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 3, 5}, {2, 5, 6}},
         "printed tables sometimes carry [e2,e4]=e6, which violates Jacobi at (1,2,3); "
         "this form is the Jacobi-consistent one"},
    };
    return entries;
}

CatalogEntry family_abelian(int n) {
    if (n < 1) throw not_found_error("abelian(n) requires n >= 1");
    CatalogEntry e{"abelian(" + std::to_string(n) + ")", StructureTable(n), Provenance::family,
                   "abelian algebra, all brackets zero", "abelian", n};
    return e;
}

CatalogEntry family_heisenberg(int m) {
    if (m < 1) throw not_found_error("heisenberg(m) requires m >= 1");
    std::vector<Triple> ts;
    for (int k = 1; k <= m; ++k) ts.push_back({2 * k, 2 * k + 1, 1});
    CatalogEntry e{"heisenberg(" + std::to_string(m) + ")", table_from(2 * m + 1, ts),
                   Provenance::family, "Heisenberg algebra h_m, [e_2k, e_2k+1] = e_1",
                   "heisenberg", m};
    return e;
}

CatalogEntry family_filiform(int n) {
    if (n < 3) throw not_found_error("filiform(n) requires n >= 3");
    std::vector<Triple> ts;
    for (int k = 2; k < n; ++k) ts.push_back({1, k, k + 1});
    CatalogEntry e{"filiform(" + std::to_string(n) + ")", table_from(n, ts), Provenance::family,
                   "model filiform algebra n_{n,1}, [e_1, e_k] = e_{k+1}", "filiform", n};
    return e;
}

CatalogEntry family_triangular(int n) {
    if (n < 2) throw not_found_error("t(n) requires n >= 2");
    // basis E_ij, i < j, ordered lexicographically
    std::vector<std::pair<int, int>> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) idx.emplace_back(i, j);
    auto pos = [&](int i, int j) {
        for (size_t p = 0; p < idx.size(); ++p)
            if (idx[p] == std::make_pair(i, j)) return static_cast<int>(p) + 1;
        return 0;
    };
    std::vector<Triple> ts;
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = a + 1; b < idx.size(); ++b) {
            auto [i, j] = idx[a];
            auto [k, l] = idx[b];
            // [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if (j == k) ts.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1, pos(i, l), 1});
            if (l == i) ts.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1, pos(k, j), -1});
        }
    }
    CatalogEntry e{"t(" + std::to_string(n) + ")",
                   table_from(static_cast<int>(idx.size()), ts), Provenance::family,
                   "strictly upper triangular matrices", "triangular", n};
    return e;
}

std::optional<int> parse_family_param(const std::string& id, const std::string& name) {
    if (id.size() <= name.size() + 2) return std::nullopt;
    if (id.compare(0, name.size(), name) != 0) return std::nullopt;
    if (id[name.size()] != '(' || id.back() != ')') return std::nullopt;
    std::string num = id.substr(name.size() + 1, id.size() - name.size() - 2);
    if (num.empty()) return std::nullopt;
    for (char c : num)
        if (c < '0' || c > '9') return std::nullopt;
    return std::stoi(num);
}

} // namespace

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : raw_entries()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

CatalogEntry catalog_lookup(const std::string& id) {
    for (const auto& raw : raw_entries()) {
        if (id == raw.id) {
            CatalogEntry e{raw.id, table_from(raw.dim, raw.brackets), Provenance::literature,
                           raw.note, std::nullopt, 0};
            if (id == "A_3_1") {
                e.family = "heisenberg";
                e.family_param = 1;
            }
            if (id == "A_4_1" || id == "A_5_2") {
                e.family = "filiform";
                e.family_param = raw.dim;
            }
            return e;
        }
    }
    if (auto n = parse_family_param(id, "abelian")) return family_abelian(*n);
    if (auto m = parse_family_param(id, "heisenberg")) return family_heisenberg(*m);
    if (auto n = parse_family_param(id, "filiform")) return family_filiform(*n);
    if (auto n = parse_family_param(id, "t")) return family_triangular(*n);
    std::string msg = "unknown algebra id '" + id + "'; available: ";
    for (const auto& known : catalog_ids()) msg += known + " ";
    msg += "plus abelian(n), heisenberg(m), filiform(n), t(n)";
    throw not_found_error(msg);
}

} // namespace nilrad
