#include "oretough/verify.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oretough/cycles.hpp"
#include "oretough/errors.hpp"
#include "oretough/lemma_lab.hpp"
#include "oretough/toughness.hpp"

namespace oretough {

const char* check_token(CheckId id) {
  switch (id) {
    case CheckId::main: return "main";
    case CheckId::bauer: return "bauer";
    case CheckId::ore: return "ore";
    case CheckId::dirac: return "dirac";
    case CheckId::lemma1: return "lemma1";
    case CheckId::lemma3: return "lemma3";
    case CheckId::lemma4: return "lemma4";
  }
  return "?";
}

std::optional<CheckId> parse_check_token(const std::string& token) {
  for (CheckId id : {CheckId::main, CheckId::bauer, CheckId::ore, CheckId::dirac,
                     CheckId::lemma1, CheckId::lemma3, CheckId::lemma4})
    if (token == check_token(id)) return id;
  return std::nullopt;
}

std::vector<CheckId> parse_check_list(const std::string& csv) {
  std::vector<CheckId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto id = parse_check_token(item);
    if (!id) throw std::invalid_argument("unknown check: " + item);
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw std::invalid_argument("no checks selected");
  return out;
}

namespace {

bool selected(const std::vector<CheckId>& checks, CheckId id) {
  return std::find(checks.begin(), checks.end(), id) != checks.end();
}

// Implication checks for the classical conditions. Strictness varies: the
// toughness-threshold hypotheses are strict inequalities, Ore and Dirac fire
// on >= as well.
void run_degree_check(VerificationRecord& rec, const Graph& g, const Rational& tau,
                      CheckId id) {
  BoundKind kind = id == CheckId::bauer ? BoundKind::bauer
                   : id == CheckId::ore ? BoundKind::ore
                                        : BoundKind::dirac;
  auto cmp = compare_bound(kind, g, tau);
  std::string status;
  if (cmp.verdict == Verdict::vacuous) {
    status = "vacuous";
  } else {
    bool fires = id == CheckId::bauer
                     ? cmp.verdict == Verdict::greater
                     : cmp.verdict == Verdict::greater || cmp.verdict == Verdict::equal;
    if (!fires) {
      status = "not-applicable";
    } else if (rec.hamiltonian) {
      status = "ok";
    } else {
      status = "violation";
      rec.violations.push_back(std::string(check_token(id)) +
                               ": hypothesis met but graph is not hamiltonian");
    }
  }
  rec.check_results.emplace_back(check_token(id), status);
}

void run_lemma_check(VerificationRecord& rec, const Graph& g, CheckId id) {
  std::string status;
  try {
    if (id == CheckId::lemma1) {
      if (g.is_complete() || !g.is_connected()) {
        status = "not-applicable";
      } else {
        auto report = check_independent_set_bound(g);
        status = !report.holds ? "violation" : report.tight ? "tight" : "ok";
        if (!report.holds)
          rec.violations.push_back(
              "lemma1: independent set of size " + std::to_string(report.alpha) +
              " exceeds n/(t+1) = " + report.bound.str());
      }
    } else {
      if (!g.is_biconnected()) {
        status = "not-applicable";
      } else {
        auto result = id == CheckId::lemma3 ? check_leftover_order_bound(g)
                                            : check_path_component_degree(g);
        if (result.violation) {
          status = "violation";
          rec.violations.push_back(std::string(check_token(id)) + ": " +
                                   result.violation->detail);
        } else {
          status = result.vacuous ? "vacuous" : result.tight_checks ? "tight" : "ok";
        }
      }
    }
  } catch (const BudgetError& e) {
    status = "budget-exceeded";
    rec.budget_notes.push_back(std::string(check_token(id)) + ": " + e.what());
  }
  rec.check_results.emplace_back(check_token(id), status);
}

}  // namespace

VerificationRecord verify_one(const Graph& g, const std::string& g6,
                              const std::vector<CheckId>& checks) {
  if (g.order() < 3) throw std::invalid_argument("verification needs order >= 3");
  VerificationRecord rec;
  rec.g6 = g6;
  rec.n = g.order();
  rec.tau = toughness_exact(g).value;
  rec.sigma2_value = sigma2(g);
  rec.delta = min_degree(g);

  bool ham_known = true;
  try {
    auto ham = hamilton_cycle(g);
    rec.hamiltonian = ham.has_value();
    if (ham) rec.cycle = ham->order();
  } catch (const BudgetError& e) {
    ham_known = false;
    rec.budget_notes.push_back(std::string("hamilton: ") + e.what());
  }

  auto main_cmp = compare_main_bound(rec.sigma2_value, rec.tau, rec.n);
  rec.verdict_main = main_cmp.verdict;

  if (!ham_known) {
    rec.classification = "budget-exceeded";
  } else {
    switch (main_cmp.verdict) {
      case Verdict::vacuous:
        rec.classification = "vacuous";
        break;
      case Verdict::less:
        rec.classification = "below-bound";
        break;
      case Verdict::greater:
        if (rec.hamiltonian) {
          rec.classification = "strict-hamiltonian-ok";
        } else {
          rec.classification = "violation";
          rec.violations.push_back(
              "main: sigma2 exceeds 2n/(t+1) - 2 but graph is not hamiltonian");
        }
        break;
      case Verdict::equal:
        if (rec.hamiltonian) {
          rec.classification = "equality-hamiltonian";
        } else if (auto cert = membership(g)) {
          rec.classification = "equality-nonhamiltonian-in-family";
          rec.extremal = cert;
        } else {
          rec.classification = "violation";
          rec.violations.push_back(
              "main: equality non-hamiltonian graph outside the extremal family");
        }
        break;
    }
  }
  if (selected(checks, CheckId::main))
    rec.check_results.emplace_back(
        "main", rec.classification == "violation"       ? "violation"
                : main_cmp.verdict == Verdict::vacuous  ? "vacuous"
                : rec.classification == "budget-exceeded" ? "budget-exceeded"
                                                          : "ok");

  for (CheckId id : {CheckId::bauer, CheckId::ore, CheckId::dirac})
    if (selected(checks, id)) {
      if (ham_known)
        run_degree_check(rec, g, rec.tau, id);
      else
        rec.check_results.emplace_back(check_token(id), "budget-exceeded");
    }
  for (CheckId id : {CheckId::lemma1, CheckId::lemma3, CheckId::lemma4})
    if (selected(checks, id)) run_lemma_check(rec, g, id);

  return rec;
}

std::string VerificationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["g6"] = g6;
  j["n"] = n;
  j["tau"] = tau.str();
  j["sigma2"] = sigma2_value.str();
  j["delta"] = delta;
  j["hamiltonian"] = hamiltonian;
  if (cycle)
    j["cycle"] = *cycle;
  else
    j["cycle"] = nullptr;
  j["verdict"] = verdict_name(verdict_main);
  j["classification"] = classification;
  if (extremal) {
    j["extremal"] = {{"independent", set_vertices(extremal->independent_part)},
                     {"core", set_vertices(extremal->core_part)}};
  } else {
    j["extremal"] = nullptr;
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [token, status] : check_results) checks[token] = status;
  j["checks"] = checks;
  j["violations"] = violations;
  j["budget"] = budget_notes;
  return j.dump();
}

std::string SweepSummary::to_json() const {
  nlohmann::ordered_json j;
  j["records"] = records;
  j["violations"] = violations;
  j["budget_trips"] = budget_trips;
  j["classifications"] = classifications;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& [line, reason] : skipped_lines)
    skipped.push_back({{"line", line}, {"reason", reason}});
  j["skipped"] = skipped;
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump();
}

namespace {

struct LineResult {
  bool skipped = false;
  std::string skip_reason;
  std::string json;
  std::string classification;
  std::size_t violations = 0;
  bool budget = false;
};

LineResult process_line(const std::string& token, const std::vector<CheckId>& checks) {
  LineResult r;
  try {
    Graph g = Graph::parse_graph6(token);
    auto rec = verify_one(g, token, checks);
    r.json = rec.to_json();
    r.classification = rec.classification;
    r.violations = rec.violations.size();
    r.budget = !rec.budget_notes.empty();
  } catch (const std::exception& e) {
    r.skipped = true;
    r.skip_reason = e.what();
  }
  return r;
}

using Chunk = std::vector<std::pair<std::size_t, std::string>>;

void run_chunk_serial(const Chunk& chunk, const std::vector<CheckId>& checks,
                      std::vector<LineResult>& out) {
  for (std::size_t i = 0; i < chunk.size(); ++i)
    out[i] = process_line(chunk[i].second, checks);
}

void run_chunk_parallel(const Chunk& chunk, const std::vector<CheckId>& checks,
                        std::vector<LineResult>& out, int jobs) {
  std::int64_t size = static_cast<std::int64_t>(chunk.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < size; ++i)
    out[i] = process_line(chunk[i].second, checks);
}

}  // namespace

SweepSummary verify_stream(std::istream& in, std::ostream& report,
                           const std::vector<CheckId>& checks, int jobs) {
  auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  const std::size_t chunk_size = 512;  // bounded reorder buffer

  Chunk chunk;
  auto flush = [&]() {
    if (chunk.empty()) return;
    std::vector<LineResult> results(chunk.size());
    if (jobs <= 1)
      run_chunk_serial(chunk, checks, results);
    else
      run_chunk_parallel(chunk, checks, results, jobs);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const auto& r = results[i];
      if (r.skipped) {
        summary.skipped_lines.emplace_back(chunk[i].first, r.skip_reason);
        continue;
      }
      report << r.json << '\n';
      ++summary.records;
      ++summary.classifications[r.classification];
      summary.violations += r.violations;
      if (r.budget) ++summary.budget_trips;
    }
    chunk.clear();
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    chunk.emplace_back(lineno, line);
    if (chunk.size() >= chunk_size) flush();
  }
  flush();

  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace oretough
