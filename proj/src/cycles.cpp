#include "oretough/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "oretough/errors.hpp"

namespace oretough {

OrientedCycle::OrientedCycle(const Graph& g, std::vector<int> order)
    : order_(std::move(order)) {
  pos_.fill(-1);
  if (order_.size() < 3) throw std::invalid_argument("cycle: length below 3");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    int v = order_[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("cycle: vertex out of range");
    if (pos_[v] >= 0) throw std::invalid_argument("cycle: repeated vertex");
    pos_[v] = static_cast<signed char>(i);
  }
  revalidate(g);
}

void OrientedCycle::revalidate(const Graph& g) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    int u = order_[i];
    int v = order_[(i + 1) % order_.size()];
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
      throw std::invalid_argument("cycle: consecutive vertices not adjacent in host");
  }
}

VertexSet OrientedCycle::vertex_set() const {
  VertexSet s = 0;
  for (int v : order_) s |= bit(v);
  return s;
}

int OrientedCycle::successor(int v) const {
  if (!contains(v)) throw std::invalid_argument("cycle: vertex not on cycle");
  return order_[(pos_[v] + 1) % order_.size()];
}

int OrientedCycle::predecessor(int v) const {
  if (!contains(v)) throw std::invalid_argument("cycle: vertex not on cycle");
  return order_[(pos_[v] + order_.size() - 1) % order_.size()];
}

std::vector<int> OrientedCycle::forward_arc(int from, int to) const {
  if (!contains(from) || !contains(to))
    throw std::invalid_argument("cycle: arc endpoint not on cycle");
  std::vector<int> arc{from};
  for (int v = from; v != to;) {
    v = order_[(pos_[v] + 1) % order_.size()];
    arc.push_back(v);
  }
  return arc;
}

std::vector<int> OrientedCycle::backward_arc(int from, int to) const {
  if (!contains(from) || !contains(to))
    throw std::invalid_argument("cycle: arc endpoint not on cycle");
  std::vector<int> arc{from};
  for (int v = from; v != to;) {
    v = order_[(pos_[v] + order_.size() - 1) % order_.size()];
    arc.push_back(v);
  }
  return arc;
}

std::vector<int> OrientedCycle::canonical_order() const {
  int len = length();
  int start = 0;
  for (int i = 1; i < len; ++i)
    if (order_[i] < order_[start]) start = i;
  std::vector<int> fwd(len), bwd(len);
  for (int i = 0; i < len; ++i) {
    fwd[i] = order_[(start + i) % len];
    bwd[i] = order_[(start + len - i) % len];
  }
  bwd[0] = order_[start];
  return fwd[1] <= bwd[1] ? fwd : bwd;
}

std::optional<OrientedCycle> hamilton_cycle(const Graph& g) {
  int n = g.order();
  if (n < 3) throw std::invalid_argument("hamilton: order below 3");
  if (n > 24) throw BudgetError("hamilton DP limited to n <= 24");

  // reach[mask >> 1] = endpoints v with a path 0 -> v spanning mask; bit 0 of
  // every mask is set, so it is dropped from the index.
  std::vector<VertexSet> reach(std::size_t{1} << (n - 1), 0);
  VertexSet full = g.vertex_mask();
  for (VertexSet m = g.neighbors(0); m; m &= m - 1) {
    int v = std::countr_zero(m);
    reach[(bit(v) | 1) >> 1] |= bit(v);
  }
  for (std::size_t idx = 1; idx < reach.size(); ++idx) {
    VertexSet ends = reach[idx];
    if (!ends) continue;
    VertexSet mask = static_cast<VertexSet>((idx << 1) | 1);
    for (VertexSet e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      for (VertexSet m = g.neighbors(v) & ~mask; m; m &= m - 1) {
        int u = std::countr_zero(m);
        reach[(mask | bit(u)) >> 1] |= bit(u);
      }
    }
  }

  VertexSet closers = reach[full >> 1] & g.neighbors(0);
  if (!closers) return std::nullopt;

  int v = lowest_vertex(closers);
  std::vector<int> tail{v};
  VertexSet mask = full;
  while (mask != (bit(v) | 1)) {
    VertexSet prev_mask = mask & ~bit(v);
    VertexSet cands = reach[prev_mask >> 1] & g.neighbors(v);
    int u = lowest_vertex(cands);
    tail.push_back(u);
    mask = prev_mask;
    v = u;
  }
  std::vector<int> order{0};
  order.insert(order.end(), tail.rbegin(), tail.rend());
  return OrientedCycle(g, std::move(order));
}

namespace {

struct BacktrackState {
  const Graph& g;
  VertexSet visited = 1;
  std::vector<int> path{0};

  bool extend() {
    int n = g.order();
    int u = path.back();
    if (static_cast<int>(path.size()) == n) return g.adjacent(u, 0);

    VertexSet rest = g.vertex_mask() & ~visited;
    if (g.components(visited & ~(bit(u) | bit(0))).size() != 1) return false;
    VertexSet avail = rest | bit(u) | bit(0);
    for (VertexSet m = rest; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (set_size(g.neighbors(w) & avail) < 2) return false;
    }
    if (!(g.neighbors(u) & rest) || !(g.neighbors(0) & rest)) return false;

    for (VertexSet m = g.neighbors(u) & rest; m; m &= m - 1) {
      int v = std::countr_zero(m);
      path.push_back(v);
      visited |= bit(v);
      if (extend()) return true;
      visited &= ~bit(v);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<OrientedCycle> hamilton_backtrack_oracle(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("hamilton: order below 3");
  BacktrackState state{g};
  if (!state.extend()) return std::nullopt;
  return OrientedCycle(g, std::move(state.path));
}

void enumerate_cycles(const Graph& g,
                      const std::function<bool(std::span<const int>)>& visit) {
  int n = g.order();
  if (n > 14) throw BudgetError("cycle enumeration limited to n <= 14");
  std::vector<int> path;
  path.reserve(n);
  VertexSet visited = 0;

  auto dfs = [&](auto&& self) -> bool {
    int u = path.back();
    if (path.size() >= 3 && g.adjacent(u, path[0]) && path[1] < u)
      if (!visit(path)) return false;
    VertexSet above = ~((bit(path[0]) << 1) - 1);  // vertices > path[0]
    for (VertexSet m = g.neighbors(u) & above & ~visited; m; m &= m - 1) {
      int v = std::countr_zero(m);
      path.push_back(v);
      visited |= bit(v);
      bool go_on = self(self);
      visited &= ~bit(v);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };

  for (int s = 0; s + 2 < n; ++s) {
    path.assign(1, s);
    visited = bit(s);
    if (!dfs(dfs)) return;
    visited = 0;
  }
}

namespace {

std::vector<int> component_profile(const Graph& g, VertexSet cycle_set) {
  std::vector<int> orders;
  for (VertexSet comp : g.components(cycle_set)) orders.push_back(set_size(comp));
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<int> count_vector(const std::vector<int>& profile, int lambda) {
  std::vector<int> c(lambda);
  for (int j = lambda; j >= 1; --j)
    c[lambda - j] = static_cast<int>(std::count_if(
        profile.begin(), profile.end(), [&](int o) { return o >= j; }));
  return c;
}

DCycleReport make_report(const Graph& g, std::vector<int> cycle, int lambda) {
  OrientedCycle checked(g, cycle);  // reports must re-validate
  auto profile = component_profile(g, checked.vertex_set());
  auto c = count_vector(profile, lambda);
  return {lambda, std::move(cycle), std::move(profile), std::move(c)};
}

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(g.components().size());
}

}  // namespace

DCycleReport smallest_d_lambda(const Graph& g) {
  if (is_forest(g)) throw std::invalid_argument("no cycle: graph is a forest");
  if (g.order() <= 24) {
    if (auto ham = hamilton_cycle(g)) return make_report(g, ham->order(), 1);
  }
  int best_max = g.order() + 1;
  std::vector<int> best_cycle;
  enumerate_cycles(g, [&](std::span<const int> path) {
    VertexSet cyc = 0;
    for (int v : path) cyc |= bit(v);
    int mx = 0;
    for (VertexSet comp : g.components(cyc)) mx = std::max(mx, set_size(comp));
    if (mx < best_max) {
      best_max = mx;
      best_cycle.assign(path.begin(), path.end());
    }
    return true;
  });
  return make_report(g, std::move(best_cycle), best_max + 1);
}

DCycleReport minimizing_d_cycle(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("minimizing cycle: s must be at least 1");
  auto base = smallest_d_lambda(g);
  if (base.lambda != s + 1)
    throw std::invalid_argument(
        "minimizing cycle: graph must have a D_{s+1}-cycle and no D_s-cycle");

  bool have = false;
  std::vector<int> best_key;
  std::size_t best_len = 0;
  std::vector<int> best_cycle;
  enumerate_cycles(g, [&](std::span<const int> path) {
    VertexSet cyc = 0;
    for (int v : path) cyc |= bit(v);
    std::vector<int> key(s, 0);  // [c_s, ..., c_1]
    for (VertexSet comp : g.components(cyc)) {
      int o = set_size(comp);
      if (o > s) return true;  // not a D_{s+1}-cycle
      for (int j = 1; j <= o; ++j) ++key[s - j];
    }
    bool better = !have;
    if (have) {
      if (key != best_key)
        better = key < best_key;
      else if (path.size() != best_len)
        better = path.size() > best_len;
      else
        better = std::lexicographical_compare(path.begin(), path.end(),
                                              best_cycle.begin(), best_cycle.end());
    }
    if (better) {
      have = true;
      best_key = key;
      best_len = path.size();
      best_cycle.assign(path.begin(), path.end());
    }
    return true;
  });
  return make_report(g, std::move(best_cycle), s + 1);
}

OrientedCycle splice(const Graph& g, const OrientedCycle& c,
                     std::span<const SpliceStep> program) {
  if (program.empty()) throw std::invalid_argument("splice: empty program");
  std::vector<int> seq;
  std::vector<int> step_of;
  for (std::size_t k = 0; k < program.size(); ++k) {
    std::vector<int> part;
    if (const auto* arc = std::get_if<ArcStep>(&program[k])) {
      part = arc->forward ? c.forward_arc(arc->from, arc->to)
                          : c.backward_arc(arc->from, arc->to);
    } else {
      part = std::get<PathStep>(program[k]).vertices;
      if (part.empty()) throw std::invalid_argument("splice: empty path step");
    }
    for (int v : part) {
      seq.push_back(v);
      step_of.push_back(static_cast<int>(k));
    }
  }

  VertexSet seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("splice: vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("splice: repeated vertex");
    seen |= bit(v);
  }
  if (seq.size() < 3) throw std::invalid_argument("splice: result shorter than 3");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::size_t next = (i + 1) % seq.size();
    if (g.adjacent(seq[i], seq[next])) continue;
    if (next == 0) throw std::invalid_argument("splice: program does not close into a cycle");
    if (step_of[i] == step_of[next])
      throw std::invalid_argument("splice: path step is not a walk in the host");
    throw std::invalid_argument("splice: junction is not an edge");
  }
  return OrientedCycle(g, std::move(seq));
}

std::variant<OrientedCycle, ToughnessContradiction> extend_cycle(
    const Graph& g, const OrientedCycle& c, int x, const Rational& t) {
  c.revalidate(g);
  if (x < 0 || x >= g.order()) throw std::invalid_argument("extend: vertex out of range");
  if (c.contains(x)) throw std::invalid_argument("extend: vertex already on cycle");

  VertexSet on_cycle = g.neighbors(x) & c.vertex_set();
  int deg = set_size(on_cycle);
  int n = g.order();
  if (!t.is_infinite()) {
    // deg > n/(t+1) - 1  <=>  (deg + 1)(p + q) > n q
    std::int64_t p = t.num(), q = t.den();
    if ((deg + 1) * (p + q) <= n * q)
      throw std::invalid_argument("extend: degree to cycle does not clear n/(t+1) - 1");
  }

  for (VertexSet m = on_cycle; m; m &= m - 1) {  // rule A
    int u = std::countr_zero(m);
    int up = c.successor(u);
    if (on_cycle & bit(up)) {
      std::vector<int> order{x};
      auto arc = c.forward_arc(up, u);
      order.insert(order.end(), arc.begin(), arc.end());
      return OrientedCycle(g, std::move(order));
    }
  }

  for (VertexSet mu = on_cycle; mu; mu &= mu - 1) {  // rule B
    int u = std::countr_zero(mu);
    int up = c.successor(u);
    for (VertexSet mv = on_cycle; mv; mv &= mv - 1) {
      int v = std::countr_zero(mv);
      if (v == u) continue;
      int vp = c.successor(v);
      if (!g.adjacent(up, vp)) continue;
      std::vector<int> order{x};
      auto back = c.backward_arc(u, vp);
      auto fwd = c.forward_arc(up, v);
      order.insert(order.end(), back.begin(), back.end());
      order.insert(order.end(), fwd.begin(), fwd.end());
      return OrientedCycle(g, std::move(order));
    }
  }

  VertexSet witness = bit(x);
  for (VertexSet m = on_cycle; m; m &= m - 1)
    witness |= bit(c.successor(std::countr_zero(m)));
  return ToughnessContradiction{witness};
}

}  // namespace oretough
