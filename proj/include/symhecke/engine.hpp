#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symhecke/cosets.hpp"
#include "symhecke/coweight.hpp"
#include "symhecke/partition.hpp"
#include "symhecke/qpoly.hpp"

namespace symhecke {

class BudgetError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A sigma failure on one representative; the message carries X as matrix JSON.
class EnumerationError : public std::runtime_error {
 public:
  EnumerationError(const std::string& what, std::string matrix_json)
      : std::runtime_error(what), matrix_json_(std::move(matrix_json)) {}
  const std::string& matrix_json() const { return matrix_json_; }

 private:
  std::string matrix_json_;
};

enum class SigmaMode {
  Invariants,  // sigma_from_invariants
  Certified,   // symmetric_coweight with a verified reduction witness
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct BruteOptions {
  int threads = 0;  // 0: SYMHECKE_THREADS, else hardware concurrency
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
  SigmaMode sigma = SigmaMode::Invariants;
  int precision = 0;  // passed to symmetric_coweight in certified mode
};

/// Worker count: an explicit request wins, then SYMHECKE_THREADS, then the
/// hardware concurrency. SYMHECKE_THREADS also caps explicit requests.
int worker_count(int requested);

struct HVector {
  std::uint32_t p = 3;
  MuSpec mu;
  SymCoweight nu;
  std::string family;  // "vertical(m,l)" or "row(m,l)"
  std::map<SymCoweight, std::int64_t> counts;

  std::int64_t total() const;
  std::int64_t at(const SymCoweight& lambda) const;
  bool operator==(const HVector&) const = default;
};

/// h(lambda) = #{X in family(mu) : sigma(X Pi^nu) = lambda}.
HVector h_bruteforce(std::uint32_t p, const MuSpec& mu, const SymCoweight& nu, const BruteOptions& opts = {});

/// Up to `limit` representatives X with sigma(X Pi^nu) = lambda, in stream order.
std::vector<LMatrix> brute_witnesses(std::uint32_t p, const MuSpec& mu, const SymCoweight& nu,
                                     const SymCoweight& lambda, std::size_t limit,
                                     const BruteOptions& opts = {});

// ---------------------------------------------------------------------------
// Verification reports

struct CaseRecord {
  std::string suite;
  std::string rule;
  std::string query;
  std::optional<std::int64_t> brute;  // oracle count
  std::optional<std::int64_t> value;  // formula at q = p
  std::string formula;                // symbolic value, when there is one
  std::string expected;               // symbolic target of a polynomial identity
  bool match = true;
  bool flagged = false;  // mismatches become findings instead of failures
  std::vector<std::string> witnesses;
};

struct Finding {
  std::string id;
  std::string text;
  bool operator==(const Finding&) const = default;
};

struct VerifyReport {
  std::string suite;
  std::uint32_t p = 3;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  std::vector<Finding> findings;

  std::size_t passed() const;
  std::size_t hard_failures() const;
  std::size_t flagged_mismatches() const;
  bool ok() const { return hard_failures() == 0; }
  void append(VerifyReport other);
};

/// One battery of the formula suite: a rule evaluated against brute force
/// for every lambda reached from nu.
struct FormulaCase {
  std::string rule;  // computen, compute1, mainthm, young, dual-1, dual-n
  MuSpec mu;
  SymCoweight nu;
  bool flagged = false;
};

std::vector<FormulaCase> default_formula_cases();

VerifyReport verify_formulas(std::uint32_t p, const std::vector<FormulaCase>& cases,
                             const BruteOptions& opts = {});
VerifyReport verify_formulas(std::uint32_t p, const BruteOptions& opts = {});

/// Random B = k Lambda h and A = k1 pi k2 with pi = diag(z^{1^l}) (resp.
/// diag(z^l, 1, ...)), m <= 4; checks the strip (resp. interlacing) relation.
VerifyReport verify_pieri(std::uint32_t p, int trials, std::uint64_t seed);
VerifyReport verify_dual_pieri(std::uint32_t p, int trials, std::uint64_t seed);

/// c_{-1} applied twice equals [2] c_{-1^2} + c_{-2}, as integer vectors at q = p.
VerifyReport verify_module_identity(std::uint32_t p, const SymCoweight& nu, const BruteOptions& opts = {});

/// Composition of two c_{-1} actions through every intermediate shape.
std::map<SymCoweight, std::int64_t> composed_vertical_action(std::uint32_t p, const SymCoweight& nu,
                                                             const BruteOptions& opts = {});

struct SuiteOptions {
  std::uint32_t p = 3;
  std::uint64_t seed = 1;
  int trials = 200;
  BruteOptions brute;
};

/// "formulas", "pieri", "dual-pieri", "module-identity" or "all".
VerifyReport run_suite(const std::string& name, const SuiteOptions& opts);
bool known_suite(const std::string& name);

}  // namespace symhecke
