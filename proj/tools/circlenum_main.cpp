#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlenum/analyze.hpp"
#include "circlenum/catalog.hpp"
#include "circlenum/pretzel.hpp"
#include "circlenum/verify.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitCap = 2;
constexpr int kExitCheckFailed = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_twists(const std::string& arg) {
  std::vector<int> twists;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw circlenum::pretzel_error("empty twist entry in '" + arg + "'");
    try {
      twists.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw circlenum::pretzel_error("bad twist entry '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : arg) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return twists;
}

int run_analyze(const std::string& input, bool json, bool no_bracket, int state_cap,
                int dealternator_cap, unsigned threads) {
  circlenum::Diagram d;
  try {
    d = circlenum::parse_pd(read_input(input));
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  circlenum::AnalyzeOptions opts;
  opts.with_bracket = !no_bracket;
  opts.state_cap = state_cap;
  opts.dealternator_cap = dealternator_cap;
  opts.threads = threads;
  circlenum::AnalysisReport rep;
  try {
    rep = circlenum::analyze(d, opts);
  } catch (const circlenum::cap_exceeded_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (json) {
    std::cout << circlenum::to_json(rep).dump(2) << "\n";
  } else {
    std::cout << circlenum::to_text(rep);
  }
  if (!rep.checks.all_pass()) {
    std::cerr << "a structural check failed; this diagram is a bug witness\n";
    return kExitCheckFailed;
  }
  return 0;
}

int run_verify(const std::string& corpus_dir, circlenum::VerifyOptions opts) {
  std::vector<circlenum::NamedDiagram> corpus;
  try {
    corpus = circlenum::default_corpus(opts);
    if (!corpus_dir.empty()) {
      std::vector<std::filesystem::path> paths;
      for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
        if (entry.is_regular_file()) paths.push_back(entry.path());
      }
      std::sort(paths.begin(), paths.end());
      for (const auto& p : paths) {
        corpus.push_back(
            circlenum::NamedDiagram{p.filename().string(), circlenum::parse_pd(read_input(p.string())), true});
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kExitParse;
  }

  circlenum::VerifySummary summary = circlenum::run_verification(corpus, opts);
  std::cout << "diagrams checked: " << summary.diagrams;
  if (summary.skipped > 0) std::cout << "  (skipped " << summary.skipped << " over the crossing cap)";
  std::cout << "\n";
  for (const auto& p : summary.properties) {
    std::cout << "  " << p.property;
    for (size_t i = p.property.size(); i < 36; ++i) std::cout << ' ';
    std::cout << " passed " << p.passed;
    if (p.failed > 0) std::cout << "  FAILED " << p.failed;
    std::cout << "\n";
    for (const auto& f : p.failures) std::cout << "      offending: " << f << "\n";
  }
  if (!summary.ok()) {
    std::cerr << "verification FAILED\n";
    return kExitCheckFailed;
  }
  std::cout << "all properties hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circle numbers, region decompositions and Kauffman brackets of PD-coded link diagrams"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one diagram and print a report");
  std::string input = "-";
  bool json = false, no_bracket = false;
  int state_cap = circlenum::kDefaultStateCap;
  int dealternator_cap = circlenum::kDefaultDealternatorCap;
  unsigned threads = 0;
  analyze_cmd->add_option("input", input, "PD file, or - for stdin (default)");
  analyze_cmd->add_flag("--json", json, "emit the JSON report");
  analyze_cmd->add_flag("--no-bracket", no_bracket, "skip the bracket state sum");
  analyze_cmd->add_option("--state-cap", state_cap, "largest crossing count for the state sum");
  analyze_cmd->add_option("--dealternator-cap", dealternator_cap, "largest k for the 2^k smoothing checks");
  analyze_cmd->add_option("--threads", threads, "state-sum worker threads (0 = auto)");

  auto* pretzel_cmd = app.add_subcommand("pretzel", "print the PD text of a pretzel diagram");
  std::string twists_arg;
  pretzel_cmd->add_option("twists", twists_arg, "signed twist counts, e.g. 4,-3,3")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the whole property suite over a corpus");
  circlenum::VerifyOptions vopts;
  std::string corpus_dir;
  verify_cmd->add_option("--corpus", corpus_dir, "directory of PD files to include");
  verify_cmd->add_option("--max-crossings", vopts.max_crossings, "skip diagrams larger than this");
  verify_cmd->add_option("--exhaustive", vopts.exhaustive_max, "all-states and switch-family cutoff");
  verify_cmd->add_option("--pretzel-max", vopts.pretzel_family_max, "alternating pretzel family cutoff");
  verify_cmd->add_option("--state-cap", vopts.state_cap, "largest crossing count for state sums");
  verify_cmd->add_option("--k11n151", vopts.k11n151_path, "PD file for the optional k11n151 entry");

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in diagrams or print one");
  std::string name;
  std::string k11_path;
  catalog_cmd->add_option("--name", name, "print just this entry's PD text");
  catalog_cmd->add_option("--k11n151", k11_path, "PD file for the optional k11n151 entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      return run_analyze(input, json, no_bracket, state_cap, dealternator_cap, threads);
    }
    if (*pretzel_cmd) {
      try {
        std::cout << circlenum::to_pd_text(circlenum::pretzel(parse_twists(twists_arg))) << "\n";
        return 0;
      } catch (const circlenum::pretzel_error& e) {
        std::cerr << "pretzel error: " << e.what() << "\n";
        return kExitParse;
      }
    }
    if (*verify_cmd) {
      return run_verify(corpus_dir, vopts);
    }
    if (*catalog_cmd) {
      auto entries = circlenum::catalog(k11_path);
      if (!name.empty()) {
        for (const auto& e : entries) {
          if (e.name == name) {
            std::cout << e.pd << "\n";
            return 0;
          }
        }
        std::cerr << "unknown catalog entry '" << name << "'\n";
        return kExitParse;
      }
      for (const auto& e : entries) {
        std::cout << e.name << "\t" << e.pd << "\n";
      }
      return 0;
    }
  } catch (const circlenum::cap_exceeded_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
