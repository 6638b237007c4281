#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "symhecke/engine.hpp"
#include "symhecke/io.hpp"
#include "symhecke/series.hpp"

using namespace symhecke;
using namespace symhecke::cli;

int main(int argc, char** argv) {
  CLI::App app{"Symmetric coweights and Hecke-module structure constants over odd prime fields"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  bool json = false, csv = false;
  app.add_option("--prime", cfg.prime, "Odd prime p")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed for property suites")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Override the reduction precision (0: policy)")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", cfg.threads, "Worker cap for enumeration (0: SYMHECKE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--csv", csv, "CSV output (HVector tables)");
  app.add_option("--out", cfg.out, "Output file for reports");
  app.add_option("--budget", cfg.budget, "Maximum number of enumerated candidates")->capture_default_str();
  app.add_flag("--force", cfg.force, "Ignore the enumeration budget");
  app.add_flag("--certified", cfg.certified, "Compute sigma with verified reduction witnesses");

  std::string matrix;
  auto* cow = app.add_subcommand("coweight", "Invariants of a matrix")->require_subcommand(1);
  auto* rho = cow->add_subcommand("rho", "Dominant coweight");
  auto* sigma = cow->add_subcommand("sigma", "Symmetric coweight");
  auto* reduce = cow->add_subcommand("reduce", "Canonical block form with witnesses");
  for (auto* sc : {rho, sigma, reduce}) sc->add_option("--matrix", matrix, "Matrix JSON file")->required();

  int dim = 0;
  std::string mu;
  std::uint64_t limit = 0;
  std::optional<std::int64_t> at;
  auto* cos = app.add_subcommand("cosets", "Coset representatives")->require_subcommand(1);
  auto* cenum = cos->add_subcommand("enum", "Emit representatives as JSON lines");
  auto* ccount = cos->add_subcommand("count", "Number of representatives as a q-polynomial");
  for (auto* sc : {cenum, ccount}) {
    sc->add_option("--dim", dim, "Matrix size m")->required();
    sc->add_option("--mu", mu, "\"1^l\" or \"l\"")->required();
  }
  cenum->add_option("--limit", limit, "Stop after n representatives");
  ccount->add_option("--at", at, "Also print the value at q = q0");

  std::string nu, lambda, rule, suite;
  std::vector<std::string> params;
  bool dump = false;
  int trials = 200;
  auto* hecke = app.add_subcommand("hecke", "Structure constants")->require_subcommand(1);
  auto* brute = hecke->add_subcommand("brute", "Count representatives by outcome");
  brute->add_option("--mu", mu, "\"-1^l\" or \"-l\"")->required();
  brute->add_option("--nu", nu, "Padded shape or block shorthand")->required();
  brute->add_option("--lambda", lambda, "Report a single outcome");
  auto* formula = hecke->add_subcommand("formula", "Evaluate a closed formula");
  formula->add_option("--rule", rule, "computen|compute1|mainthm|corollary|young|dual-n|dual-1")->required();
  formula->add_option("--params", params, "key=value parameters")->required();
  formula->add_option("--at", at, "Also print the value at q = q0");
  formula->add_flag("--dump-witnesses", dump, "Print tuple classes or tableaux as JSON");
  auto* verify = hecke->add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "formulas|pieri|dual-pieri|module-identity|all")->required();
  verify->add_option("--trials", trials, "Trials per property suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }
  if (json && csv) {
    std::cerr << "error: --json and --csv are exclusive\n";
    return kInvalidInput;
  }
  cfg.format = json ? Format::Json : csv ? Format::Csv : Format::Text;

  try {
    require_odd_prime(cfg.prime);
    if (*rho) return cmd_rho(cfg, matrix, std::cout);
    if (*sigma) return cmd_sigma(cfg, matrix, std::cout);
    if (*reduce) return cmd_reduce(cfg, matrix, std::cout);
    if (*cenum) return cmd_cosets_enum(cfg, dim, mu, limit, std::cout);
    if (*ccount) return cmd_cosets_count(cfg, dim, mu, at, std::cout);
    if (*brute) return cmd_brute(cfg, mu, nu, lambda, std::cout);
    if (*formula) return cmd_formula(cfg, rule, params, at, dump, std::cout);
    if (*verify) return cmd_verify(cfg, suite, trials, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const EnumerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInvalidInput;
}
