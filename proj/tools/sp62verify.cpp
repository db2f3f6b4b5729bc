// Command-line driver: `verify` runs the pipeline and writes the report,
// `explain` prints what a claim id checks and which source statement it
// tracks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sp62v/claims.hpp"
#include "sp62v/stages.hpp"

int main(int argc, char** argv)
{
  CLI::App app{"exact verification toolkit for the degree-36 PSp6(2) Galois family"};
  app.require_subcommand(1);

  sp62v::PipelineConfig config;
  std::string report_path;

  CLI::App* verify = app.add_subcommand("verify", "run verification stages");
  verify->add_option("--stage", config.stages,
                     "stages to run (all, triple, census, nielsen, belyi, family, dedekind, "
                     "index63, cited); prerequisites are pulled in automatically");
  verify->add_option("--seed", config.seed, "deterministic seed for sampling and factorization");
  verify->add_option("--primes", config.primes,
                     "explicit prime list for Dedekind sampling (default: 25 smallest good "
                     "primes above 100)");
  verify->add_option("--samples-per-prime", config.samples_per_prime,
                     "specializations sampled per prime");
  verify->add_option("--a0", config.a0_values,
                     "family specialization values (repeatable; avoid 0 and 1/512)");
  verify->add_option("--report", report_path, "write the report to this file (default: stdout)");
  verify->add_option("--tolerance-fix", config.tol_fix, "tolerance for |mean fix - 1|");
  verify->add_option("--tolerance-fix2", config.tol_fix2, "tolerance for |mean fix^2 - 2|");
  verify->add_option("--min-types", config.min_distinct_types,
                     "required number of distinct observed census types");
  verify->add_option("--constants", config.constants_path, "path to the exact constants file");

  std::string claim_id;
  CLI::App* explain = app.add_subcommand("explain", "describe a claim id");
  explain->add_option("id", claim_id, "claim id, e.g. nielsen.length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      sp62v::PipelineOutcome outcome = sp62v::run_pipeline(config);
      if (report_path.empty()) {
        std::cout << outcome.report.to_text();
      } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
          std::cerr << "cannot write report to '" << report_path << "'\n";
          return 2;
        }
        out << outcome.report.to_text();
      }
      std::cerr << outcome.console;
      return outcome.exit_code;
    }
    std::cout << sp62v::explain_claim(claim_id);
    return 0;
  } catch (const sp62v::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
