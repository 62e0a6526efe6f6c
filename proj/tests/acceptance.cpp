// End-to-end acceptance battery. Each criterion prints exactly one
// PASS/FAIL line; the process exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oretough/canonical.hpp"
#include "oretough/conditions.hpp"
#include "oretough/cycles.hpp"
#include "oretough/extremal.hpp"
#include "oretough/generate.hpp"
#include "oretough/lemma_lab.hpp"
#include "oretough/toughness.hpp"
#include "oretough/verify.hpp"
#include "test_util.hpp"

using namespace oretough;
using namespace oretough::testutil;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& errs, bool ok, const std::string& what) {
  if (!ok) errs.push_back(what);
}

// ---- criterion 1: the sharp 5-vertex fixture, exact values, under 1 s ----

void criterion_sharp_fixture(std::vector<std::string>& errs) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g = complete_bipartite(2, 3);
  expect(errs, toughness_exact(g).value == Rational(2, 3), "tau != 2/3");
  expect(errs, sigma2(g) == Rational(4), "sigma2 != 4");
  expect(errs, !hamilton_cycle(g).has_value(), "unexpected hamilton cycle");
  auto cmp = compare_main_bound(Rational(4), Rational(2, 3), 5);
  expect(errs, cmp.verdict == Verdict::equal, "threshold comparison not equal");
  expect(errs, cmp.rhs == Rational(4), "threshold value wrong");
  expect(errs, membership(g).has_value(), "family membership not recognized");
  auto report = certify_extremal_properties(g);
  expect(errs, report.certified(), "sharpness certificate incomplete");
  auto rec = verify_one(g, g.to_graph6(), parse_check_list("main"));
  expect(errs, rec.classification == "equality-nonhamiltonian-in-family",
         "classification: " + rec.classification);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(errs, secs < 1.0, "fixture took " + std::to_string(secs) + " s");
}

// ---- criterion 2: zero threshold violations on every connected class, n 3..8 ----

void criterion_exhaustive_threshold(std::vector<std::string>& errs) {
  auto checks = parse_check_list("main");
  long long scanned = 0, family_hits = 0, violations = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : graph_classes(n, GraphClass::connected)) {
      auto rec = verify_one(g, g.to_graph6(), checks);
      ++scanned;
      violations += static_cast<long long>(rec.violations.size());
      if (rec.classification == "violation" && violations <= 3)
        errs.push_back("violation at " + g.to_graph6());
      if (rec.classification == "equality-nonhamiltonian-in-family") ++family_hits;
    }
  }
  expect(errs, scanned == 12111, "expected 12111 classes, saw " + std::to_string(scanned));
  expect(errs, violations == 0, std::to_string(violations) + " violations");
  // equality non-hamiltonian classes: 1 (n=3) + 2 (n=5) + 4 (n=7)
  expect(errs, family_hits == 7, "family classes seen: " + std::to_string(family_hits));
}

// ---- criterion 3: family recognition complete against permutation search ----

void criterion_family_complete(std::vector<std::string>& errs) {
  long long expected_all[] = {4, 34, 1044};
  long long expected_members[] = {1, 2, 4};
  int idx = 0;
  for (int n : {3, 5, 7}) {
    std::vector<Graph> family;
    int pairs = (n - 1) / 2 * ((n - 1) / 2 - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      family.push_back(generate_family(n, mask));
    auto classes = graph_classes(n, GraphClass::all);
    expect(errs, static_cast<long long>(classes.size()) == expected_all[idx],
           "class census mismatch at n=" + std::to_string(n));
    long long members = 0;
    for (const Graph& g : classes) {
      bool truth = false;
      for (const Graph& f : family)
        if (brute_force_isomorphic(g, f)) {
          truth = true;
          break;
        }
      bool claimed = membership(g).has_value();
      if (claimed != truth)
        errs.push_back("membership mismatch at " + g.to_graph6() + " (n=" +
                       std::to_string(n) + "): claimed " + std::to_string(claimed) +
                       ", truth " + std::to_string(truth));
      if (truth) {
        ++members;
        if (claimed && !certify_extremal_properties(g).certified())
          errs.push_back("member " + g.to_graph6() + " fails sharpness certificate");
      }
    }
    expect(errs, members == expected_members[idx],
           "member class count at n=" + std::to_string(n) + ": " + std::to_string(members));
    ++idx;
  }
}

// ---- criterion 4: independent oracles agree (toughness, hamiltonicity) ----

void criterion_oracles_agree(std::vector<std::string>& errs) {
  long long toughness_cases = 0, hamilton_cases = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::all)) {
      ++toughness_cases;
      if (toughness_exact(g).value != toughness_naive_oracle(g))
        errs.push_back("toughness mismatch at " + g.to_graph6());
    }
  std::mt19937 rng(0x5eed);
  for (int trial = 0; trial < 220; ++trial) {
    int n = 8 + static_cast<int>(rng() % 5);  // 8..12
    Graph g = random_graph(n, 0.15 + 0.07 * (trial % 10), rng);
    ++toughness_cases;
    if (toughness_exact(g).value != toughness_naive_oracle(g))
      errs.push_back("toughness mismatch at " + g.to_graph6());
  }
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::all)) {
      ++hamilton_cases;
      if (hamilton_cycle(g).has_value() != hamilton_backtrack_oracle(g).has_value())
        errs.push_back("hamilton mismatch at " + g.to_graph6());
    }
  for (int trial = 0; trial < 520; ++trial) {
    int n = 9 + static_cast<int>(rng() % 6);  // 9..14
    Graph g = random_graph(n, 0.2 + 0.06 * (trial % 11), rng);
    ++hamilton_cases;
    auto dp = hamilton_cycle(g);
    if (dp.has_value() != hamilton_backtrack_oracle(g).has_value())
      errs.push_back("hamilton mismatch at " + g.to_graph6());
    if (dp) {
      dp->revalidate(g);
      if (dp->length() != g.order()) errs.push_back("short cycle at " + g.to_graph6());
    }
  }
  expect(errs, toughness_cases >= 1452, "too few toughness cases");
  expect(errs, hamilton_cases >= 14100, "too few hamilton cases");
}

// ---- criterion 5: classical degree conditions never misfire, n 3..8 ----

void criterion_degree_conditions(std::vector<std::string>& errs) {
  auto checks = parse_check_list("bauer,ore,dirac");
  long long fired = 0;
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::connected)) {
      auto rec = verify_one(g, g.to_graph6(), checks);
      if (!rec.violations.empty())
        errs.push_back("degree-condition violation at " + g.to_graph6() + ": " +
                       rec.violations.front());
      for (const auto& [token, status] : rec.check_results)
        if (status == "ok") ++fired;
    }
  expect(errs, fired > 1000, "suspiciously few applicable cases: " + std::to_string(fired));
}

// ---- criterion 6: independent-set ratio bound, exhaustive for n 3..8 ----

void criterion_independence_bound(std::vector<std::string>& errs) {
  long long checked = 0, tight = 0;
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::connected)) {
      if (g.is_complete()) continue;
      auto rep = check_independent_set_bound(g);
      ++checked;
      if (!rep.holds)
        errs.push_back("ratio bound fails at " + g.to_graph6() + " (alpha " +
                       std::to_string(rep.alpha) + " > " + rep.bound.str() + ")");
      if (rep.tight) ++tight;
    }
  expect(errs, checked == 12105, "expected 12105 noncomplete classes, saw " +
                                     std::to_string(checked));
  expect(errs, tight > 0, "no tight case found");
  expect(errs, check_independent_set_bound(complete_bipartite(2, 3)).tight,
         "K_{2,3} should be tight");
  expect(errs, check_independent_set_bound(cycle_graph(6)).tight, "C_6 should be tight");
}

// ---- criterion 7: structural cycle bounds across all 2-connected classes, n 3..9 ----

void criterion_lemma_sweep(std::vector<std::string>& errs) {
  auto t0 = std::chrono::steady_clock::now();
  long long expected[] = {1, 3, 10, 56, 468, 7123, 194066};
  long long substantive_a = 0, substantive_b = 0, tight_a = 0;
  for (int n = 3; n <= 9; ++n) {
    auto classes = graph_classes(n, GraphClass::biconnected);
    expect(errs, static_cast<long long>(classes.size()) == expected[n - 3],
           "2-connected census mismatch at n=" + std::to_string(n) + ": " +
               std::to_string(classes.size()));
    for (const Graph& g : classes) {
      auto a = check_leftover_order_bound(g);
      if (!a.passed())
        errs.push_back("leftover bound violated at " + g.to_graph6() + ": " +
                       a.violation->detail);
      substantive_a += a.substantive_checks;
      tight_a += a.tight_checks;
      auto b = check_path_component_degree(g);
      if (!b.passed())
        errs.push_back("path-degree bound violated at " + g.to_graph6() + ": " +
                       b.violation->detail);
      substantive_b += b.substantive_checks;
    }
  }
  expect(errs, substantive_a > 0, "leftover bound never substantive");
  expect(errs, substantive_b > 0, "path-degree bound never substantive");
  expect(errs, tight_a > 0, "leftover bound never tight");
  expect(errs, check_leftover_order_bound(complete_bipartite(2, 3)).tight_checks == 1,
         "K_{2,3} leftover bound not tight");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(errs, secs < 1800.0, "sweep took " + std::to_string(secs) + " s (budget 1800)");
}

// ---- criterion 8: serialization round trips; reports identical at any parallelism ----

void criterion_io_stability(std::vector<std::string>& errs) {
  expect(errs, complete_graph(4).to_graph6() == "C~", "K_4 must encode as C~");
  expect(errs, Graph::parse_graph6("C~") == complete_graph(4), "C~ must decode to K_4");
  std::mt19937 rng(1961);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    Graph g = random_graph(n, 0.05 + 0.09 * (trial % 11), rng);
    Graph back = Graph::parse_graph6(g.to_graph6());
    if (!(back == g)) {
      errs.push_back("round trip failed for " + g.to_graph6());
      break;
    }
  }

  std::ostringstream input;
  for (int n = 5; n <= 7; ++n)
    for (const Graph& g : graph_classes(n, GraphClass::connected))
      input << g.to_graph6() << "\n";
  auto checks = parse_check_list("main,bauer,ore,dirac,lemma1,lemma3,lemma4");
  std::istringstream in1(input.str()), in8(input.str());
  std::ostringstream out1, out8;
  auto sum1 = verify_stream(in1, out1, checks, 1);
  auto sum8 = verify_stream(in8, out8, checks, 8);
  expect(errs, sum1.records == 986, "expected 986 records, saw " +
                                        std::to_string(sum1.records));
  expect(errs, out1.str() == out8.str(), "reports differ between jobs=1 and jobs=8");
  expect(errs, sum1.records == sum8.records && sum1.violations == sum8.violations &&
                   sum1.classifications == sum8.classifications,
         "summaries differ between jobs=1 and jobs=8");
  expect(errs, sum1.violations == 0, "violations in the stream sweep");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"sharp fixture exact values", criterion_sharp_fixture},
      {"exhaustive threshold sweep n<=8", criterion_exhaustive_threshold},
      {"extremal family recognition complete", criterion_family_complete},
      {"independent oracles agree", criterion_oracles_agree},
      {"classical degree conditions hold", criterion_degree_conditions},
      {"independence ratio bound holds", criterion_independence_bound},
      {"cycle-structure bounds sweep n<=9", criterion_lemma_sweep},
      {"serialization and parallel stability", criterion_io_stability},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::vector<std::string> errs;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(errs);
    } catch (const std::exception& e) {
      errs.push_back(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (errs.empty()) {
      std::printf("[PASS] criterion %zu: %s (%.2fs)\n", i + 1, criteria[i].name.c_str(),
                  secs);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %zu: %s (%.2fs)\n", i + 1, criteria[i].name.c_str(),
                  secs);
      for (const auto& e : errs) std::printf("       - %s\n", e.c_str());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
