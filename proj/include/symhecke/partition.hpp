#pragma once

#include <string>
#include <vector>

namespace symhecke {

/// Weakly decreasing integer tuple with explicit length; negative parts allowed.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts into weakly decreasing order.
  static Partition sorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // sum of parts
  int operator[](int i) const { return parts_[i]; }
  /// Number of parts equal to v.
  int multiplicity(int v) const;
  Partition shifted(int k) const;

  auto operator<=>(const Partition&) const = default;
  std::string to_string() const;  // "3,1,0"

 private:
  std::vector<int> parts_;
};

/// Parses "3,1,0" (whitespace tolerated).
Partition parse_partition(const std::string& s);

/// The double-coset invariant: a multiset of two-dimensional block exponents
/// (each >= 2) together with the numbers of z and 1 blocks.
struct SymCoweight {
  std::vector<int> big_parts;  // weakly decreasing
  int count_z = 0;
  int count_one = 0;

  int dim() const { return count_one + count_z + 2 * static_cast<int>(big_parts.size()); }
  /// Length-dim partition: big parts, then count_z ones, then zeros.
  Partition padded() const;
  static SymCoweight from_padded(const Partition& p);
  /// "blocks: [3]; z:0; one:0; padded: 3,0"
  std::string describe() const;

  auto operator<=>(const SymCoweight&) const = default;
};

/// Accepts a padded partition "3,1,0,0" or block shorthand "blocks=3;z=1;one=1"
/// (blocks may list several exponents separated by commas or be empty).
SymCoweight parse_shape(const std::string& s);

}  // namespace symhecke
