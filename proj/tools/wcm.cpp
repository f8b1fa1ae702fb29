#include "acceptance.hpp"
#include "run.hpp"
#include "wcm/parallel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

bool useColor() { return isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr; }

int runCommand(const std::string& path, const std::string& out, const wcm::app::RunFlags& flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto result = wcm::app::runProblem(buf.str(), flags, useColor());
  if (result.exitCode != 0) {
    std::cerr << path << ":" << result.text << "\n";
    return result.exitCode;
  }
  const std::string json = wcm::app::serialize(result.report);
  if (out == "-") {
    std::cout << json;
    return 0;
  }
  std::cout << result.text;
  if (!out.empty()) {
    std::ofstream o(out, std::ios::binary);
    if (!o || !(o << json)) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
  }
  return 0;
}

int selftest(const std::string& filter) {
  const auto results = wcm::app::runAcceptance(filter);
  if (results.empty()) {
    std::cerr << "warning: no test matches filter '" << filter << "'\n";
    std::cout << "0 passed, 0 failed\n";
    return 0;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << wcm::app::formatResult(r, useColor()) << "\n";
    failed += !r.pass;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak commensurability, genericity and local invariants at desk scale"};
  app.require_subcommand(1);
  app.set_version_flag("--version", wcm::app::kToolVersion);

  int threads = 1;
  std::string file, out, filter;
  wcm::app::RunFlags flags;
  int precision = 0, bound = 0, wordLength = -1;
  std::uint64_t budget = 0, seed = 0;

  auto* run = app.add_subcommand("run", "Analyse one problem file");
  run->add_option("file", file, "Problem file (JSON)")->required();
  run->add_option("--out", out, "Write the structured report here ('-' prints it instead of the summary)");
  run->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  auto* precisionOpt = run->add_option("--precision-bits", precision, "Interval precision in bits")->check(CLI::Range(16, 4096));
  auto* boundOpt = run->add_option("--exponent-bound", bound, "Exponent bound B")->check(CLI::Range(1, 1000));
  auto* wordOpt = run->add_option("--word-length", wordLength, "Word length for spectra")->check(CLI::Range(0, 12));
  auto* budgetOpt = run->add_option("--prime-budget", budget, "Largest prime examined")->check(CLI::Range(2, 100000000));
  auto* seedOpt = run->add_option("--seed", seed, "Seed for stochastic tasks");
  run->add_flag("--timings", flags.timings, "Add wall-clock timings to the report");

  auto* self = app.add_subcommand("selftest", "Run the bundled acceptance suite");
  self->add_option("--filter", filter, "Only criteria whose name contains this");
  self->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);
  wcm::setThreadCount(threads);

  if (*run) {
    if (*precisionOpt) flags.precisionBits = precision;
    if (*boundOpt) flags.exponentBound = bound;
    if (*wordOpt) flags.wordLength = wordLength;
    if (*budgetOpt) flags.primeBudget = budget;
    if (*seedOpt) flags.seed = seed;
    return runCommand(file, out, flags);
  }
  return selftest(filter);
}
