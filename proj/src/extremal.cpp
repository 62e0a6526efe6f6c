#include "oretough/extremal.hpp"

#include <stdexcept>

#include "oretough/cycles.hpp"
#include "oretough/toughness.hpp"

namespace oretough {

Graph generate_family(int n, std::uint64_t core_edges) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("extremal family: order must be odd and at least 3");
  if (n > 23)
    throw std::invalid_argument("extremal family: 64-bit core mask supports n <= 23");
  int k = (n - 1) / 2;
  int pairs = k * (k - 1) / 2;
  if (core_edges >> pairs)
    throw std::invalid_argument("extremal family: core edge mask out of range");
  Graph core(k);
  int idx = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((core_edges >> idx) & 1) core.add_edge(i, j);
  return join(core, Graph(k + 1));
}

std::optional<ExtremalCertificate> membership(const Graph& g) {
  int n = g.order();
  if (n < 3 || n % 2 == 0) return std::nullopt;
  int k = (n - 1) / 2;
  std::optional<ExtremalCertificate> best;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != k) continue;
    VertexSet core = g.neighbors(v);
    VertexSet indep = g.vertex_mask() & ~core;
    bool ok = true;
    for (VertexSet m = indep; ok && m; m &= m - 1)
      ok = g.neighbors(std::countr_zero(m)) == core;
    if (!ok) continue;
    if (!best || indep < best->independent_part)
      best = ExtremalCertificate{indep, core};
  }
  return best;
}

ExtremalReport certify_extremal_properties(const Graph& g) {
  auto cert = membership(g);
  if (!cert)
    throw std::invalid_argument("extremal certificate: graph is not in the family");
  int n = g.order();
  Rational tau = toughness_exact(g).value;
  Rational s2 = sigma2(g);
  bool ham = hamilton_cycle(g).has_value();
  Verdict verdict = compare_main_bound(s2, tau, n).verdict;
  return {*cert,
          tau,
          s2,
          ham,
          verdict,
          tau == Rational(n - 1, n + 1),
          s2 == Rational(n - 1),
          !ham,
          verdict == Verdict::equal};
}

}  // namespace oretough
