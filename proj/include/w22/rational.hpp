#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace w22 {

/// Exact rational scalar. GMP keeps results of arithmetic in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "3", "-1/2".
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace w22
