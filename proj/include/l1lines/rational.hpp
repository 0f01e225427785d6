#pragma once

#include <gmpxx.h>

#include <string>

namespace l1lines {

// Exact rational scalar. GMP keeps values in canonical form (reduced
// fraction, positive denominator), so == is structural equality.
using Rat = mpq_class;

// Accepts "<int>" or "<int>/<int>" in base 10. Throws std::invalid_argument
// on anything else, including zero denominators.
Rat parse_rational(const std::string& token);

// Canonical text: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace l1lines
