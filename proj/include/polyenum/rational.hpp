#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace polyenum {

// Exact rational scalar. gmpxx keeps values canonical (lowest terms,
// positive denominator) through all arithmetic, which is exactly the
// contract the engine needs; nothing here may ever round.
using Rational = mpq_class;

// Two-argument mpq_class construction does not reduce; this does.
inline Rational rat(long n, long d = 1) {
    Rational v(n, d);
    v.canonicalize();
    return v;
}

// Parses "n" or "n/d" in base 10. Throws std::invalid_argument on junk.
Rational rat_from_string(const std::string& text);

std::string rat_to_string(const Rational& v);

// sqrt over Q: defined only when numerator and denominator are both
// perfect squares. Returns the nonnegative root.
std::optional<Rational> rat_sqrt(const Rational& v);

}  // namespace polyenum
