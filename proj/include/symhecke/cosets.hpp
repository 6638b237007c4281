#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symhecke/matrix.hpp"
#include "symhecke/partition.hpp"
#include "symhecke/qpoly.hpp"

namespace symhecke {

enum class CosetKind {
  Vertical,  // K pi^{1^l} K = disjoint union of K X
  Row,       // K pi^{l} K  = disjoint union of K X
};

/// A family descriptor as typed on the command line: "1^2", "2", "-1^2", "-2",
/// "1^0", "0". The sign only records whether the Hecke action (negative) or
/// the coset family itself is meant; both select the same representatives.
struct MuSpec {
  CosetKind kind = CosetKind::Vertical;
  int ell = 0;
  bool negative = false;

  Partition partition(int m) const;  // {1^l,0^..} or {l,0^..}, signed
  std::string to_string() const;
  bool operator==(const MuSpec&) const = default;
};

MuSpec parse_mu(const std::string& s);

/// Right-coset representatives K\(K pi^mu K), mu = {1^l} or {l}.
///
/// The family is an index space of candidate upper-triangular matrices,
/// grouped by diagonal pattern and ordered lexicographically by
/// (diagonal exponents, entry coefficients). Candidates failing the
/// dominant-coweight condition are skipped, so candidate(i) may be empty.
/// Index ranges can be consumed independently by parallel workers.
class CosetFamily {
 public:
  CosetFamily() = default;
  static CosetFamily vertical(int m, int ell, std::uint32_t p);
  static CosetFamily row(int m, int ell, std::uint32_t p);
  static CosetFamily from_mu(int m, const MuSpec& mu, std::uint32_t p);

  int dim() const { return m_; }
  int ell() const { return ell_; }
  std::uint32_t prime() const { return p_; }
  CosetKind kind() const { return kind_; }
  Partition mu() const;
  QPoly expected_count() const;

  std::uint64_t index_space() const { return total_; }
  std::optional<LMatrix> candidate(std::uint64_t index) const;
  /// Calls f on every representative with index in [begin, end).
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(const LMatrix&)>& f) const;
  void for_each(const std::function<void(const LMatrix&)>& f) const { for_each(0, total_, f); }
  /// All representatives in stream order; limit 0 means no limit.
  std::vector<LMatrix> materialize(std::uint64_t limit = 0) const;
  std::uint64_t count() const;

 private:
  struct Slot {
    int row, col, ncoef;
  };
  struct Pattern {
    std::vector<int> diag;
    std::vector<Slot> slots;
    std::uint64_t offset = 0, size = 1;
  };
  void add_pattern(std::vector<int> diag);
  bool accept(const LMatrix& X) const;

  CosetKind kind_ = CosetKind::Vertical;
  int m_ = 0, ell_ = 0;
  std::uint32_t p_ = 3;
  std::vector<Pattern> patterns_;
  std::uint64_t total_ = 0;
};

CosetFamily enum_vertical_reps(int m, int ell, std::uint32_t p);
CosetFamily enum_row_reps(int m, int ell, std::uint32_t p);

/// Number of representatives as a polynomial in q: the q-binomial for {1^l},
/// q^{(m-1)(l-1)} [m] for {l}, and 1 for mu = 0. Other mu are a domain error.
QPoly coset_count(int m, const Partition& mu);

/// Rank of the constant-term matrix X(0) over F_p (X must be over F_p[z]).
int rank_mod_z(const LMatrix& X);

}  // namespace symhecke
