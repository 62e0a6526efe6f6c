#include "oretough/lemma_lab.hpp"

#include <stdexcept>

#include "oretough/cycles.hpp"
#include "oretough/errors.hpp"
#include "oretough/toughness.hpp"

namespace oretough {

namespace {

void require_biconnected(const Graph& g, const char* what) {
  if (!g.is_biconnected())
    throw std::invalid_argument(std::string(what) + ": graph must be 2-connected");
}

VertexSet neighborhood(const Graph& g, VertexSet part) {
  VertexSet nb = 0;
  for (VertexSet m = part; m; m &= m - 1) nb |= g.neighbors(std::countr_zero(m));
  return nb & ~part;
}

bool induces_path(const Graph& g, VertexSet comp) {
  int order = set_size(comp);
  int twice_edges = 0;
  for (VertexSet m = comp; m; m &= m - 1) {
    int d = set_size(g.neighbors(std::countr_zero(m)) & comp);
    if (d > 2) return false;
    twice_edges += d;
  }
  return twice_edges == 2 * (order - 1);
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  for (int v : set_vertices(s)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

LemmaCheckResult check_leftover_order_bound(const Graph& g) {
  require_biconnected(g, "leftover order bound");
  if (g.order() > 12) throw BudgetError("leftover order bound limited to n <= 12");

  auto first = smallest_d_lambda(g);
  if (first.lambda == 1) return {true, 0, 0, std::nullopt};
  int s = first.lambda - 1;
  auto rep = minimizing_d_cycle(g, s);
  OrientedCycle cycle(g, rep.cycle);

  auto tau = toughness_exact(g).value;
  std::int64_t p = tau.num(), q = tau.den();
  std::int64_t n = g.order();

  LemmaCheckResult result{false, 0, 0, std::nullopt};
  for (VertexSet comp : g.components(cycle.vertex_set())) {
    std::int64_t h = set_size(comp);
    std::int64_t d = set_size(neighborhood(g, comp));
    // n >= (t + h)(d + 1) cross-multiplied by q
    std::int64_t lhs = n * q;
    std::int64_t rhs = (p + h * q) * (d + 1);
    ++result.substantive_checks;
    if (lhs == rhs) ++result.tight_checks;
    if (lhs < rhs) {
      result.violation = LemmaViolation{
          LemmaId::leftover_order_bound, rep.cycle,
          "component " + set_str(comp) + ": n=" + std::to_string(n) +
              " < (t+" + std::to_string(h) + ")(" + std::to_string(d + 1) +
              ") with t=" + tau.str()};
      return result;
    }
  }
  return result;
}

LemmaCheckResult check_path_component_degree(const Graph& g) {
  require_biconnected(g, "path component degree");
  if (g.order() > 10) throw BudgetError("path component degree limited to n <= 10");

  auto first = smallest_d_lambda(g);
  if (first.lambda == 1) return {true, 0, 0, std::nullopt};
  int lambda = first.lambda - 1;  // a D_{lambda+1}-cycle exists, no D_lambda-cycle

  auto tau = toughness_exact(g).value;
  std::int64_t p = tau.num(), q = tau.den();
  std::int64_t n = g.order();
  // deg(x, C) <= n/(t+1) - lambda  <=>  deg * (p+q) <= n q - lambda (p+q)
  std::int64_t limit = n * q - lambda * (p + q);

  LemmaCheckResult result{false, 0, 0, std::nullopt};
  enumerate_cycles(g, [&](std::span<const int> path) {
    VertexSet cyc = 0;
    for (int v : path) cyc |= bit(v);

    bool qualifies = true;
    bool found = false;
    bool tight = false;
    for (VertexSet comp : g.components(cyc)) {
      int o = set_size(comp);
      if (o <= lambda - 1) continue;
      if (!induces_path(g, comp)) {
        qualifies = false;
        break;
      }
      for (VertexSet m = comp; m; m &= m - 1) {
        std::int64_t deg = set_size(g.neighbors(std::countr_zero(m)) & cyc);
        if (deg * (p + q) <= limit) {
          found = true;
          if (deg * (p + q) == limit) tight = true;
        }
      }
    }
    if (!qualifies) return true;
    ++result.substantive_checks;
    if (tight) ++result.tight_checks;
    if (!found) {
      result.violation = LemmaViolation{
          LemmaId::path_component_degree,
          std::vector<int>(path.begin(), path.end()),
          "no path component of order >= " + std::to_string(lambda) +
              " has a vertex with deg(x,C) <= n/(t+1) - lambda, t=" + tau.str()};
      return false;
    }
    return true;
  });
  result.vacuous = result.substantive_checks == 0 && !result.violation;
  return result;
}

}  // namespace oretough
