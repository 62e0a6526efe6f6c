#include "oretough/rational.hpp"

#include <limits>

namespace oretough {

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::make_checked(__int128 num, __int128 den) {
  if (den < 0) { num = -num; den = -den; }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b) { __int128 t = a % b; a = b; b = t; }
  if (a > 1) { num /= a; den /= a; }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw std::overflow_error("rational: value exceeds 64-bit components");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

}  // namespace oretough
