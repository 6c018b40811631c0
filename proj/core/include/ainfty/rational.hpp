#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ainfty {

// mpq_class keeps every value canonical (positive denominator, reduced).
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace ainfty
