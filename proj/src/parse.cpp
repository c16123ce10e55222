#include <sstream>

#include "nilrad/catalog.hpp"
#include "nilrad/errors.hpp"

namespace nilrad {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_index(const std::string& tok, int lineno) {
    for (char c : tok)
        if (c < '0' || c > '9') throw parse_error(lineno, "expected index, got '" + tok + "'");
    try {
        return std::stoi(tok);
    } catch (...) {
        throw parse_error(lineno, "index out of range: '" + tok + "'");
    }
}

} // namespace

StructureTable parse_algebra_text_unchecked(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int dim = -1;
    std::vector<BracketDef> defs;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        if (dim < 0) {
            if (tokens.size() != 2 || tokens[0] != "dim")
                throw parse_error(lineno, "expected 'dim <n>' as the first directive");
            dim = parse_index(tokens[1], lineno);
            if (dim < 1) throw parse_error(lineno, "dimension must be positive");
            continue;
        }
        std::string stripped = strip_comment(line);
        auto colon = stripped.find(':');
        if (tokens[0] != "bracket" || colon == std::string::npos)
            throw parse_error(lineno, "expected 'bracket j k : l c[, l c ...]'");
        auto head = tokenize(stripped.substr(0, colon));
        if (head.size() != 3) throw parse_error(lineno, "expected 'bracket j k' before ':'");
        BracketDef def;
        def.j = parse_index(head[1], lineno);
        def.k = parse_index(head[2], lineno);
        std::string tail = stripped.substr(colon + 1);
        std::vector<std::string> terms;
        std::string cur;
        for (char c : tail) {
            if (c == ',') {
                terms.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        terms.push_back(cur);
        for (const auto& term : terms) {
            auto pair = tokenize(term);
            if (pair.size() != 2)
                throw parse_error(lineno, "expected 'index coefficient' term, got '" + term + "'");
            int l = parse_index(pair[0], lineno);
            Rat c;
            try {
                c = rat_from_string(pair[1]);
            } catch (const std::exception& e) {
                throw parse_error(lineno, e.what());
            }
            def.rhs.emplace_back(l, c);
        }
        defs.push_back(std::move(def));
    }
    if (dim < 0) throw parse_error(lineno, "missing 'dim <n>' directive");
    try {
        return StructureTable::from_brackets(dim, defs);
    } catch (const malformed_table_error& e) {
        throw parse_error(lineno, e.what());
    }
}

StructureTable parse_algebra_text(const std::string& text) {
    StructureTable table = parse_algebra_text_unchecked(text);
    ValidationResult val = validate_lie_algebra(table);
    if (!val.ok) {
        const auto& v = val.violations.front();
        throw parse_error(0, "Jacobi identity fails at triple (" + std::to_string(v.j + 1) + "," +
                                 std::to_string(v.k + 1) + "," + std::to_string(v.l + 1) +
                                 "), defect " + vec_to_string(v.defect));
    }
    return table;
}

std::string serialize_algebra(const StructureTable& table) {
    std::ostringstream out;
    out << "dim " << table.dim() << "\n";
    for (const auto& [jk, rhs] : table.entries()) {
        out << "bracket " << jk.first + 1 << " " << jk.second + 1 << " :";
        bool first = true;
        for (const auto& [pos, c] : rhs) {
            out << (first ? " " : ", ") << pos + 1 << " " << to_string(c);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace nilrad
