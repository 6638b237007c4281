#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symhecke/partition.hpp"
#include "symhecke/qpoly.hpp"

namespace symhecke {

/// A padded partition describing a symmetric coweight: nonnegative, weakly
/// decreasing, with at least as many zeros as parts >= 2.
class PaddedShape {
 public:
  PaddedShape() = default;
  explicit PaddedShape(const Partition& parts);
  static PaddedShape from_coweight(const SymCoweight& s) { return PaddedShape(s.padded()); }
  static PaddedShape parse(const std::string& s) { return from_coweight(parse_shape(s)); }

  const std::vector<int>& parts() const { return parts_.parts(); }
  int n() const { return parts_.length(); }
  int operator[](int i) const { return parts_[i]; }
  int multiplicity(int v) const { return parts_.multiplicity(v); }
  int big_count() const;  // number of parts >= 2
  /// n - 2 * (number of parts >= 2): the number of one-dimensional blocks.
  int t1() const { return n() - 2 * big_count(); }
  /// Distinct part values >= 2, increasing.
  std::vector<int> big_values() const;
  SymCoweight coweight() const { return SymCoweight::from_padded(parts_); }
  const Partition& partition() const { return parts_; }
  std::string to_string() const { return parts_.to_string(); }

  auto operator<=>(const PaddedShape&) const = default;

 private:
  Partition parts_;
};

// ---------------------------------------------------------------------------
// Paired tuples

/// Statistics of one part value a >= 2. With (part row, zero row) the forced
/// pair: w00 neither boxed, w11 both boxed, plus only the part row boxed
/// (a -> a+1), minus only the zero row boxed (a -> a-1).
struct OmegaEntry {
  int value = 0;
  int w00 = 0, w11 = 0, minus = 0, plus = 0;
  auto operator<=>(const OmegaEntry&) const = default;
};

/// Statistics of the one-dimensional rows: pairs (z -> z^2), 1 -> 0 moves
/// (z -> 1), 0 -> 1 moves (1 -> z).
struct OmegaOne {
  int pairs = 0, one_to_zero = 0, zero_to_one = 0;
  int total() const { return pairs + one_to_zero + zero_to_one; }
  auto operator<=>(const OmegaOne&) const = default;
};

struct OmegaStats {
  std::vector<OmegaEntry> big;  // one entry per distinct part value >= 2, increasing
  OmegaOne one;
  const OmegaEntry* find(int value) const;
  std::string to_string() const;
  auto operator<=>(const OmegaStats&) const = default;
};

struct PairedTuple {
  std::vector<int> w;                       // 0/1 per row of the padded shape
  std::vector<std::pair<int, int>> pairs;   // 0-based (row, partner), forced then optional
  std::vector<int> hat;                     // transformed tuple
  int size() const;
};

struct TupleClass {
  OmegaStats omega;
  PairedTuple representative;  // first tuple met in enumeration order
  std::size_t members = 0;
};

/// Equivalence classes of W_{l,nu}^lambda in order of their statistics.
std::vector<TupleClass> enum_paired_tuples(int ell, const PaddedShape& nu, const PaddedShape& lambda);
/// The same classes for every reachable lambda.
std::map<SymCoweight, std::vector<TupleClass>> paired_tuple_classes(int ell, const PaddedShape& nu);

OmegaStats omega_of(const PairedTuple& t, const PaddedShape& nu);

/// r([w]) for a class of tuples on nu.
int tuple_exponent(const OmegaStats& omega, const PaddedShape& nu);

// ---------------------------------------------------------------------------
// Paired diagrams and semi-tableaux (nu with n/2 zeros and no parts equal to 1)

struct PairedDiagram {
  PaddedShape nu;
  std::vector<int> boxes;  // 0/1 per row

  int n() const { return nu.n(); }
  int added() const;
  /// r_i = omega_i - omega_{n-i+1} for the upper rows.
  std::vector<int> reduced() const;
  SymCoweight reduced_shape() const;
  std::string to_string() const;
  auto operator<=>(const PairedDiagram&) const = default;
};

struct PairedTableau {
  PairedDiagram diagram;
  std::vector<int> fill;  // number in the added box of each row, 0 if none
  std::string to_string() const;
  auto operator<=>(const PairedTableau&) const = default;
};

/// Throws DomainError unless nu has n/2 zeros and no part equal to 1.
void require_young_shape(const PaddedShape& nu);

std::vector<PairedDiagram> enum_paired_diagrams(int ell, const PaddedShape& nu, const PaddedShape& lambda);
std::vector<PairedDiagram> enum_paired_diagrams(int ell, const PaddedShape& nu);
std::vector<PairedTableau> enum_tableaux(const PairedDiagram& d);
bool tableau_legal(const PairedTableau& t);

/// Rows of the i-th subtableau and their labels, for debugging and tests.
struct SubtableauRow {
  int row;  // 1-based
  int label_a, label_b;
  bool boxed;
};
std::vector<SubtableauRow> subtableau(const PairedTableau& t, int i);

QPoly tableau_weight(const PairedTableau& t);
/// Per-number weights wt_1 .. wt_n.
std::vector<QPoly> tableau_weights(const PairedTableau& t);

}  // namespace symhecke
