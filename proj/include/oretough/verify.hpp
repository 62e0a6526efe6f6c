#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oretough/conditions.hpp"
#include "oretough/extremal.hpp"
#include "oretough/graph.hpp"
#include "oretough/rational.hpp"

namespace oretough {

enum class CheckId { main, bauer, ore, dirac, lemma1, lemma3, lemma4 };

// CLI token for a check and back; tokens are the stable external names.
const char* check_token(CheckId id);
std::optional<CheckId> parse_check_token(const std::string& token);
std::vector<CheckId> parse_check_list(const std::string& csv);  // throws on unknown

struct VerificationRecord {
  std::string g6;
  int n = 0;
  Rational tau;
  Rational sigma2_value;
  int delta = 0;
  bool hamiltonian = false;
  std::optional<std::vector<int>> cycle;
  Verdict verdict_main = Verdict::vacuous;
  // strict-hamiltonian-ok | equality-hamiltonian |
  // equality-nonhamiltonian-in-family | below-bound | vacuous | violation
  std::string classification;
  std::optional<ExtremalCertificate> extremal;
  std::vector<std::pair<std::string, std::string>> check_results;  // token -> status
  std::vector<std::string> violations;
  std::vector<std::string> budget_notes;

  std::string to_json() const;  // single line, stable key order
};

VerificationRecord verify_one(const Graph& g, const std::string& g6,
                              const std::vector<CheckId>& checks);

struct SweepSummary {
  std::size_t records = 0;
  std::size_t violations = 0;
  std::size_t budget_trips = 0;
  std::map<std::string, std::size_t> classifications;
  std::vector<std::pair<std::size_t, std::string>> skipped_lines;  // line no, reason
  double elapsed_seconds = 0;

  std::string to_json() const;
};

// Reads graph6 lines (blank lines and a ">>graph6<<" header are tolerated,
// malformed lines are reported and skipped), writes one JSON record per
// graph in input order. jobs <= 1 runs the plain serial loop; jobs > 1
// processes bounded chunks with OpenMP and reorders, so output is
// byte-identical at any parallelism level.
SweepSummary verify_stream(std::istream& in, std::ostream& report,
                           const std::vector<CheckId>& checks, int jobs);

}  // namespace oretough
