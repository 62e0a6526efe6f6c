#include "oretough/conditions.hpp"

#include <stdexcept>

#include "oretough/toughness.hpp"

namespace oretough {

Rational sigma2(const Graph& g) {
  int best = -1;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      int sum = g.degree(u) + g.degree(v);
      if (best < 0 || sum < best) best = sum;
    }
  return best < 0 ? Rational::infinity() : Rational(best);
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::greater: return "greater";
    case Verdict::equal: return "equal";
    case Verdict::less: return "less";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

namespace {

BoundComparison finish(BoundKind kind, const Rational& lhs,
                       std::optional<Rational> rhs, bool vacuous) {
  Verdict verdict;
  if (vacuous || !rhs) {
    verdict = Verdict::vacuous;
  } else {
    auto cmp = lhs <=> *rhs;
    verdict = cmp > 0 ? Verdict::greater : cmp < 0 ? Verdict::less : Verdict::equal;
  }
  return {kind, lhs, rhs, verdict};
}

}  // namespace

BoundComparison compare_main_bound(const Rational& sigma2_value,
                                   const Rational& tau, int n) {
  if (tau.is_infinite() || sigma2_value.is_infinite())
    return finish(BoundKind::main, sigma2_value, std::nullopt, true);
  std::int64_t p = tau.num(), q = tau.den();
  Rational rhs(2 * n * q - 2 * (p + q), p + q);
  return finish(BoundKind::main, sigma2_value, rhs, tau == Rational(0));
}

BoundComparison compare_bound(BoundKind kind, const Graph& g, const Rational& tau) {
  int n = g.order();
  if (g.is_complete()) {
    Rational lhs = (kind == BoundKind::main || kind == BoundKind::ore)
                       ? Rational::infinity()
                       : Rational(min_degree(g));
    return finish(kind, lhs, std::nullopt, true);
  }
  std::int64_t p = tau.num(), q = tau.den();
  switch (kind) {
    case BoundKind::main:
      return compare_main_bound(sigma2(g), tau, n);
    case BoundKind::bauer:
      return finish(kind, Rational(min_degree(g)),
                    Rational(n * q - (p + q), p + q), tau == Rational(0));
    case BoundKind::ore:
      return finish(kind, sigma2(g), Rational(n), false);
    case BoundKind::dirac:
      return finish(kind, Rational(min_degree(g)), Rational(n, 2), false);
  }
  throw std::logic_error("unknown bound kind");
}

namespace {

int clique_cover_bound(const Graph& g, VertexSet cand) {
  int cover = 0;
  while (cand) {
    int v = lowest_vertex(cand);
    cand &= ~bit(v);
    VertexSet common = g.neighbors(v) & cand;
    while (common) {
      int u = lowest_vertex(common);
      cand &= ~bit(u);
      common &= g.neighbors(u) & cand;
    }
    ++cover;
  }
  return cover;
}

struct MisSearch {
  const Graph& g;
  int best = 0;
  VertexSet best_set = 0;

  void run(VertexSet cand, VertexSet current, int size) {
    if (size > best) {
      best = size;
      best_set = current;
    }
    if (!cand || size + clique_cover_bound(g, cand) <= best) return;
    int pivot = lowest_vertex(cand);
    for (VertexSet m = cand; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (set_size(g.neighbors(v) & cand) > set_size(g.neighbors(pivot) & cand))
        pivot = v;
    }
    run(cand & ~(g.neighbors(pivot) | bit(pivot)), current | bit(pivot), size + 1);
    run(cand & ~bit(pivot), current, size);
  }
};

}  // namespace

int independence_number(const Graph& g, VertexSet* witness) {
  MisSearch search{g};
  search.run(g.vertex_mask(), 0, 0);
  if (witness) *witness = search.best_set;
  return search.best;
}

IndependenceBoundReport check_independent_set_bound(const Graph& g) {
  if (g.is_complete())
    throw std::invalid_argument("independent-set bound: graph must be noncomplete");
  if (!g.is_connected())
    throw std::invalid_argument("independent-set bound: graph must have positive toughness");
  Rational tau = toughness_exact(g).value;
  VertexSet witness = 0;
  int alpha = independence_number(g, &witness);
  Rational bound(static_cast<std::int64_t>(g.order()) * tau.den(),
                 tau.num() + tau.den());
  IndependenceBoundReport report{true, false, alpha, bound, std::nullopt};
  auto cmp = Rational(alpha) <=> bound;
  if (cmp > 0) {
    report.holds = false;
    report.violating_set = witness;
  } else if (cmp == 0) {
    report.tight = true;
  }
  return report;
}

}  // namespace oretough
