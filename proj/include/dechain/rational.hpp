#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dechain {

/// Exact arbitrary-precision rational. All coefficient arithmetic uses this.
using Rational = mpq_class;

/// Serialized as "p/q" with q > 0, always including the denominator.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or a bare integer.
Rational parse_rational(std::string_view text);

inline int sign_of_permutation_parity(int inversions) { return (inversions % 2 == 0) ? 1 : -1; }

}  // namespace dechain
