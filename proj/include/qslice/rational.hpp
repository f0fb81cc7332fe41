#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qslice {

// Exact rational scalar. GMP keeps num/den coprime with positive denominator,
// which is exactly the canonical form every module here relies on.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

}  // namespace qslice
