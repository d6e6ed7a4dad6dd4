#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's templated mixed comparisons recurse forever once C++20 adds
// reversed operator== candidates. Exact non-template overloads win overload
// resolution and route every mixed comparison through rational == rational.
namespace boost {
#define SL2HAT_MIXED_EQ(INT)                                                      \
  inline bool operator==(const rational<std::int64_t>& a, INT b) {                \
    return a.numerator() == static_cast<std::int64_t>(b) && a.denominator() == 1; \
  }
SL2HAT_MIXED_EQ(int)
SL2HAT_MIXED_EQ(long)
SL2HAT_MIXED_EQ(long long)
#undef SL2HAT_MIXED_EQ
}  // namespace boost

namespace sl2hat {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, denominator always present ("3/1", "-1/2").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

}  // namespace sl2hat
