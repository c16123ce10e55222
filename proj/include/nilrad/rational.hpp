#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilrad {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator; arithmetic never rounds.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Accepts "p" or "p/q" with optional sign. Throws std::invalid_argument on
// junk, zero denominator included.
Rat rat_from_string(const std::string& s);

bool vec_is_zero(const Vec& v);
Vec vec_zero(int n);
Vec unit_vec(int n, int i); // 0-based position
void vec_add_scaled(Vec& dst, const Rat& c, const Vec& src);
std::string vec_to_string(const Vec& v);

} // namespace nilrad
