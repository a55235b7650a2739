#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "blowup/report.hpp"

using namespace blowup;

namespace {

int exit_code_for(const RunReport& r) {
  if (r.any_violation()) return 2;
  if (r.any_error()) return 1;
  return 0;
}

void add_common(CLI::App* cmd, RunOptions& opt, bool& json,
                std::optional<uint32_t>& prime, std::optional<int>& maxpow) {
  cmd->add_flag("--json", json, "emit the JSON report instead of text");
  cmd->add_option("--seed", opt.seed, "random seed for generic choices");
  cmd->add_option("--prime", prime, "override the coefficient prime");
  cmd->add_option("--max-power", maxpow,
                  "cap the depth-of-powers window at this exponent");
  cmd->add_option("--rmax", opt.rmax,
                  "iteration cap for the reduction-number search");
  cmd->add_flag("--timings", opt.timings,
                "include wall-clock timings (JSON output stops being "
                "byte-reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blow-up algebra toolkit: invariants of ideals and checks of "
               "depth bounds for associated graded rings"};
  app.require_subcommand(1);

  std::string file;
  bool json_check = false, json_corpus = false;
  RunOptions opt_check, opt_corpus;
  std::optional<uint32_t> prime_check, prime_corpus;
  std::optional<int> maxpow_check, maxpow_corpus;

  CLI::App* check = app.add_subcommand(
      "check", "run a session file of declarations and checks");
  check->add_option("file", file, "session file (.bld)")->required();
  add_common(check, opt_check, json_check, prime_check, maxpow_check);

  int vars = 3, maxdeg = 3, count = 10;
  uint64_t corpus_seed = 0;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "run randomized monomial instances through every check");
  corpus->add_option("--vars", vars, "number of variables")->required();
  corpus->add_option("--maxdeg", maxdeg, "maximum generator degree")
      ->required();
  corpus->add_option("--count", count, "number of instances")->required();
  corpus->add_option("--seed", corpus_seed, "corpus seed")->required();
  corpus->add_flag("--json", json_corpus, "emit the JSON report");
  corpus->add_option("--prime", prime_corpus, "override the coefficient prime");
  corpus->add_option("--max-power", maxpow_corpus,
                     "cap the depth-of-powers window");
  corpus->add_option("--rmax", opt_corpus.rmax,
                     "iteration cap for the reduction-number search");
  corpus->add_flag("--timings", opt_corpus.timings,
                   "include wall-clock timings");

  CLI11_PARSE(app, argc, argv);

  try {
    RunReport report;
    bool json = false;
    if (check->parsed()) {
      opt_check.prime_override = prime_check;
      opt_check.max_power = maxpow_check;
      json = json_check;
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return 1;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      SessionAST ast = parse_session(ss.str());
      report = run_session(ast, opt_check);
    } else {
      opt_corpus.prime_override = prime_corpus;
      opt_corpus.max_power = maxpow_corpus;
      json = json_corpus;
      report = run_corpus_instances(vars, maxdeg, count, corpus_seed,
                                    opt_corpus);
    }
    std::cout << (json ? emit_json(report) : emit_text(report));
    return exit_code_for(report);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n  hint: " << e.hint
              << "\n";
    return 1;
  } catch (const kernel_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
