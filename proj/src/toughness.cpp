#include "oretough/toughness.hpp"

#include <cstdint>

#include "oretough/errors.hpp"

namespace oretough {

ToughnessResult toughness_exact(const Graph& g) {
  if (g.is_complete()) return {Rational::infinity(), std::nullopt};
  {
    auto comps = g.components();
    if (comps.size() >= 2)
      return {Rational(0), ToughnessWitness{0, static_cast<int>(comps.size())}};
  }

  int n = g.order();
  Rational best = Rational::infinity();
  ToughnessWitness witness{0, 0};
  for (int s = 1; s <= n - 2; ++s) {
    if (Rational(s, n - s) > best) break;
    std::uint64_t sub = (std::uint64_t{1} << s) - 1;
    std::uint64_t end = std::uint64_t{1} << n;
    while (sub < end) {
      auto cutset = static_cast<VertexSet>(sub);
      auto comps = g.components(cutset);
      if (comps.size() >= 2) {
        Rational ratio(s, static_cast<int>(comps.size()));
        if (ratio < best) {
          best = ratio;
          witness = {cutset, static_cast<int>(comps.size())};
        } else if (ratio == best && cutset < witness.cutset) {
          witness = {cutset, static_cast<int>(comps.size())};
        }
      }
      std::uint64_t low = sub & -sub;        // Gosper: next subset of size s
      std::uint64_t ripple = sub + low;
      sub = ripple | (((sub ^ ripple) >> 2) / low);
    }
  }
  return {best, witness};
}

Rational toughness_naive_oracle(const Graph& g) {
  if (g.order() > 16) throw BudgetError("toughness oracle limited to n <= 16");
  Rational best = Rational::infinity();
  std::uint32_t end = std::uint32_t{1} << g.order();
  for (std::uint32_t s = 0; s < end; ++s) {
    auto comps = g.components(s);
    if (comps.size() >= 2) {
      Rational ratio(set_size(s), static_cast<int>(comps.size()));
      if (ratio < best) best = ratio;
    }
  }
  return best;
}

ToughnessCheck is_t_tough(const Graph& g, const Rational& t) {
  if (t == Rational(0) || g.is_complete()) return {true, std::nullopt};
  auto result = toughness_exact(g);
  if (t <= result.value) return {true, std::nullopt};
  return {false, result.witness};
}

}  // namespace oretough
