#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkcomp {

/// Arbitrary-precision integer used for every count.
using Count = boost::multiprecision::cpp_int;
/// Exact rational in canonical (reduced, positive denominator) form.
using Ratio = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<Count>>;
using RatioMatrix = std::vector<std::vector<Ratio>>;

Count factorial(std::int64_t k);

/// binom(a, b); zero whenever b < 0 or b > a (including negative a).
Count binomial(std::int64_t a, std::int64_t b);

Count catalan(std::int64_t k);

/// binom(total; parts). Throws PartsSumMismatch if the parts do not add up.
Count multinomial(std::int64_t total, std::span<const int> parts);

Count power(const Count& base, std::uint64_t exponent);

/// coef * base^exponent for exponent >= -1. An exponent of -1 is only
/// accepted when base divides coef exactly, otherwise InternalInconsistency.
Count scaled_power(const Count& coef, const Count& base, std::int64_t exponent);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
Count determinant(IntMatrix m);

/// Determinant by Gaussian elimination over exact rationals.
Ratio determinant(RatioMatrix m);

}  // namespace parkcomp
