#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cobord2 {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses `p`, `-p`, or `p/q`. Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q`, or just `p` when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace cobord2
