#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jloci {

/// Exact rational scalar. Every coefficient in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace jloci
