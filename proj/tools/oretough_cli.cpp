#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oretough/cycles.hpp"
#include "oretough/extremal.hpp"
#include "oretough/generate.hpp"
#include "oretough/toughness.hpp"
#include "oretough/verify.hpp"

using namespace oretough;

namespace {

Graph parse_or_die(const std::string& token) {
  try {
    return Graph::parse_graph6(token);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(2);
  }
}

int cmd_verify(const std::string& input, const std::string& checks_csv,
               int jobs, const std::string& report_path,
               const std::string& summary_path) {
  std::vector<CheckId> checks;
  try {
    checks = parse_check_list(checks_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open input: " << input << "\n";
      return 2;
    }
    in = &file;
  }
  std::ofstream report_file;
  std::ostream* report = &std::cout;
  if (!report_path.empty()) {
    report_file.open(report_path);
    if (!report_file) {
      std::cerr << "error: cannot open report path: " << report_path << "\n";
      return 2;
    }
    report = &report_file;
  }

  SweepSummary summary = verify_stream(*in, *report, checks, jobs);

  for (const auto& [line, reason] : summary.skipped_lines)
    std::cerr << "line " << line << " skipped: " << reason << "\n";
  if (summary_path.empty()) {
    std::cerr << summary.to_json() << "\n";
  } else {
    std::ofstream out(summary_path);
    if (!out) {
      std::cerr << "error: cannot open summary path: " << summary_path << "\n";
      return 2;
    }
    out << summary.to_json() << "\n";
  }
  return summary.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hamiltonicity, toughness and degree-sum threshold toolkit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "sweep a graph6 stream, one JSON record per graph");
  std::string input = "-", checks_csv = "main", report_path, summary_path;
  int jobs = 1;
  verify->add_option("--input", input, "graph6 file, or - for stdin");
  verify->add_option("--checks", checks_csv,
                     "comma list of main,bauer,ore,dirac,lemma1,lemma3,lemma4");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "record file (default stdout)");
  verify->add_option("--summary", summary_path, "summary file (default stderr)");

  std::string g6;
  auto* toughness = app.add_subcommand("toughness", "exact toughness with witness cutset");
  toughness->add_option("--g6", g6)->required();
  auto* hamilton = app.add_subcommand("hamilton", "hamilton cycle or exact absence");
  hamilton->add_option("--g6", g6)->required();
  auto* sigma2cmd = app.add_subcommand("sigma2", "minimum nonadjacent degree sum");
  sigma2cmd->add_option("--g6", g6)->required();
  auto* dlambda = app.add_subcommand("dlambda", "smallest lambda with a D_lambda-cycle");
  dlambda->add_option("--g6", g6)->required();

  auto* extremal_cmd = app.add_subcommand("extremal", "equality family tools");
  extremal_cmd->require_subcommand(1);
  int family_n = 0;
  std::int64_t core_index = -1;
  auto* egen = extremal_cmd->add_subcommand("gen", "emit family members as graph6");
  egen->add_option("--n", family_n, "odd order")->required();
  egen->add_option("--core-index", core_index, "core edge bitmask (default: all)");
  auto* echeck = extremal_cmd->add_subcommand("check", "membership and sharpness data");
  echeck->add_option("--g6", g6)->required();

  auto* gen = app.add_subcommand("gen", "emit one representative per isomorphism class");
  int gen_n = 0;
  std::string gen_class = "connected";
  gen->add_option("--n", gen_n, "order, at most 9")->required();
  gen->add_option("--class", gen_class, "connected | biconnected | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify)
      return cmd_verify(input, checks_csv, jobs, report_path, summary_path);

    nlohmann::ordered_json j;
    if (*toughness) {
      Graph g = parse_or_die(g6);
      auto result = toughness_exact(g);
      j["g6"] = g6;
      j["tau"] = result.value.str();
      if (result.witness) {
        j["cutset"] = set_vertices(result.witness->cutset);
        j["components"] = result.witness->component_count;
      } else {
        j["cutset"] = nullptr;
        j["components"] = nullptr;
      }
    } else if (*hamilton) {
      Graph g = parse_or_die(g6);
      auto cycle = hamilton_cycle(g);
      j["g6"] = g6;
      j["hamiltonian"] = cycle.has_value();
      if (cycle)
        j["cycle"] = cycle->order();
      else
        j["cycle"] = nullptr;
    } else if (*sigma2cmd) {
      Graph g = parse_or_die(g6);
      j["g6"] = g6;
      j["sigma2"] = sigma2(g).str();
    } else if (*dlambda) {
      Graph g = parse_or_die(g6);
      auto report = smallest_d_lambda(g);
      j["g6"] = g6;
      j["lambda"] = report.lambda;
      j["cycle"] = report.cycle;
      j["leftover_profile"] = report.leftover_profile;
      j["c_vector"] = report.c_vector;
    } else if (*egen) {
      if (core_index >= 0) {
        std::cout << generate_family(family_n, static_cast<std::uint64_t>(core_index))
                         .to_graph6()
                  << "\n";
      } else {
        int k = (family_n - 1) / 2;
        if (family_n < 3 || family_n % 2 == 0 || k * (k - 1) / 2 > 20) {
          std::cerr << "error: --n must be odd, 3..13 when emitting every core\n";
          return 2;
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * (k - 1) / 2)); ++mask)
          std::cout << generate_family(family_n, mask).to_graph6() << "\n";
      }
      return 0;
    } else if (*echeck) {
      Graph g = parse_or_die(g6);
      j["g6"] = g6;
      if (auto cert = membership(g)) {
        auto report = certify_extremal_properties(g);
        j["member"] = true;
        j["independent"] = set_vertices(cert->independent_part);
        j["core"] = set_vertices(cert->core_part);
        j["tau"] = report.tau.str();
        j["sigma2"] = report.sigma2_value.str();
        j["hamiltonian"] = report.hamiltonian;
        j["verdict"] = verdict_name(report.verdict);
        j["certified"] = report.certified();
      } else {
        j["member"] = false;
      }
    } else if (*gen) {
      GraphClass cls;
      if (gen_class == "connected")
        cls = GraphClass::connected;
      else if (gen_class == "biconnected")
        cls = GraphClass::biconnected;
      else if (gen_class == "all")
        cls = GraphClass::all;
      else {
        std::cerr << "error: unknown class: " << gen_class << "\n";
        return 2;
      }
      for (const Graph& g : graph_classes(gen_n, cls))
        std::cout << g.to_graph6() << "\n";
      return 0;
    }
    std::cout << j.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
