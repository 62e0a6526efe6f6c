#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oretough {

// Reduced fraction with a distinguished +infinity, used for toughness and
// degree-sum thresholds. Every comparison cross-multiplies in 128 bits, so
// values never pass through floating point.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    num_ = num;
    den_ = den;
  }

  static constexpr Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  constexpr bool is_infinite() const { return den_ == 0; }
  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return make_checked(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (b.is_infinite()) throw std::domain_error("rational: subtracting infinity");
    if (a.is_infinite()) return infinity();
    return make_checked(static_cast<__int128>(a.num_) * b.den_ -
                            static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.num_ == 0 || b.num_ == 0)
        throw std::domain_error("rational: infinity times zero");
      return infinity();
    }
    return make_checked(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
  }

  // "p/q" in lowest terms, "p" for integers, "inf" for infinity.
  std::string str() const;

 private:
  static Rational make_checked(__int128 num, __int128 den);

  std::int64_t num_;
  std::int64_t den_;  // 0 encodes infinity (num_ == 1)
};

}  // namespace oretough
