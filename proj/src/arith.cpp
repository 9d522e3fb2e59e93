#include "parkcomp/arith.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "parkcomp/error.hpp"

namespace parkcomp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::BlockCountMismatch: return "BlockCountMismatch";
    case ErrorKind::PartsSumMismatch: return "PartsSumMismatch";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::InvalidLabeling: return "InvalidLabeling";
    case ErrorKind::DegenerateSignature: return "DegenerateSignature";
    case ErrorKind::NotCornered: return "NotCornered";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Count factorial(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "factorial of negative number");
  Count r = 1;
  for (std::int64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

Count binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count r = 1;
  // r stays integral: after step i it equals binom(a - b + i, i).
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Count catalan(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "catalan of negative number");
  return binomial(2 * k, k) / (k + 1);
}

Count multinomial(std::int64_t total, std::span<const int> parts) {
  std::int64_t sum = 0;
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative multinomial part");
    sum += p;
  }
  if (total < 0 || sum != total)
    throw Error(ErrorKind::PartsSumMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(total));
  Count r = 1;
  std::int64_t running = 0;
  for (int p : parts) {
    running += p;
    r *= binomial(running, p);
  }
  return r;
}

Count power(const Count& base, std::uint64_t exponent) {
  Count r = 1;
  Count b = base;
  while (exponent > 0) {
    if (exponent & 1u) r *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return r;
}

Count scaled_power(const Count& coef, const Count& base, std::int64_t exponent) {
  if (exponent >= 0) return coef * power(base, static_cast<std::uint64_t>(exponent));
  if (exponent == -1 && base != 0 && coef % base == 0) return coef / base;
  throw Error(ErrorKind::InternalInconsistency,
              "non-integral power: " + coef.str() + " * " + base.str() + "^" +
                  std::to_string(exponent));
}

Count determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::ParameterOutOfRange, "matrix is not square");
  if (n == 0) return 1;

  int sign = 1;
  Count prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity keeps this division exact.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Ratio determinant(RatioMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::ParameterOutOfRange, "matrix is not square");

  Ratio det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Ratio f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace parkcomp
