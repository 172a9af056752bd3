// verify <suite> --n <int> --seed <int> --tol <float> --mesh-order <int> --report json
//
// Prints the JSON report on stdout and a table on stderr.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weylgerbe/suites.hpp"

namespace {

void print_table(const weylgerbe::SuiteReport& report) {
  std::fprintf(stderr, "%-52s %-6s %24s %10s\n", "check", "status", "|value|", "tol");
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "%-52s %-6s %24.6e %10.1e\n", c.id.c_str(), std::string(to_string(c.status)).c_str(),
                 std::abs(c.value), c.tolerance);
  }
  std::fprintf(stderr, "%zu pass, %zu fail, %zu skip in %.2f s\n", report.count(weylgerbe::CheckStatus::Pass),
               report.count(weylgerbe::CheckStatus::Fail), report.count(weylgerbe::CheckStatus::Skip),
               report.wall_time_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run numerical verification suites for the Weyl and basic bundle gerbes."};
  std::string suite;
  weylgerbe::SuiteOptions opts;
  std::string report_format = "json";
  app.add_option("suite", suite, "appendix-lemmas | cocycles | connective-data | root-space | holonomy | all")
      ->required();
  app.add_option("--n", opts.n, "rank of SU(n), 2..8");
  app.add_option("--seed", opts.seed, "seed for the sample generator");
  app.add_option("--tol", opts.tol, "tolerance for residual checks")->check(CLI::PositiveNumber);
  app.add_option("--mesh-order", opts.mesh_order, "Gauss-Legendre order of the sphere mesh")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", report_format, "report format")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const weylgerbe::SuiteReport report = weylgerbe::run_suite(suite, opts);
    std::cout << weylgerbe::to_json(report).dump(2) << '\n';
    print_table(report);
    return report.all_passed() ? 0 : 1;
  } catch (const weylgerbe::GerbeError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    const auto kind = e.kind();
    if (kind == weylgerbe::ErrorKind::UnknownSuite || kind == weylgerbe::ErrorKind::RankOutOfRange ||
        kind == weylgerbe::ErrorKind::ChartOutOfRange)
      return 2;
    return 1;
  }
}
