#pragma once

#include <stdexcept>
#include <string>

namespace nilrad {

// Base class for all analysis errors raised by the library. The CLI maps
// these to exit code 1; parse_error (bad input) maps to exit code 2.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_error : error {
    using error::error;
};

struct containment_error : error {
    using error::error;
};

struct malformed_table_error : error {
    using error::error;
};

struct not_nilpotent_error : error {
    using error::error;
};

struct no_layers_error : error {
    using error::error;
};

struct not_a_derivation_error : error {
    using error::error;
};

struct not_found_error : error {
    using error::error;
};

struct unsupported_factor_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what)
        : error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace nilrad
