#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mawdist/errors.hpp"

namespace mawdist {

/// Exact fraction with 64-bit numerator/denominator, always normalized
/// (positive denominator, gcd 1). Backs the exact accumulation route for the
/// length-weighted index, where golden values are asserted as fractions.
/// Intermediate products are widened to 128 bits; a result outside 64 bits
/// throws InternalError.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw InputError("rational with zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  Rational plus(const Rational& other) const {
    __int128 n = static_cast<__int128>(num) * other.den +
                 static_cast<__int128>(other.num) * den;
    __int128 d = static_cast<__int128>(den) * other.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
      throw InternalError("rational accumulation overflowed 64 bits");
    }
    return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const Rational&) const = default;

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

}  // namespace mawdist
