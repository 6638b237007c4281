#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symhecke/laurent.hpp"
#include "symhecke/series.hpp"

namespace symhecke {

/// Dense matrix of Laurent polynomials over F_p.
class LMatrix {
 public:
  LMatrix() = default;
  LMatrix(std::uint32_t p, int rows, int cols);
  LMatrix(std::uint32_t p, int dim) : LMatrix(p, dim, dim) {}
  static LMatrix identity(std::uint32_t p, int dim);
  /// diag(z^{e_1}, ..., z^{e_m}).
  static LMatrix diag_powers(std::uint32_t p, const std::vector<int>& exps);
  /// Block-diagonal sum.
  static LMatrix direct_sum(const LMatrix& a, const LMatrix& b);

  std::uint32_t prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return rows_; }
  bool square() const { return rows_ == cols_; }

  LaurentPoly& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const LaurentPoly& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator+(const LMatrix& a, const LMatrix& b);
  LMatrix scaled_by(const LaurentPoly& f) const;
  /// Entrywise f(-z).
  LMatrix reflected() const;
  LMatrix transposed() const;
  /// Entrywise even_in_t / odd_in_t.
  LMatrix even_in_t() const;
  LMatrix odd_in_t() const;
  LMatrix squared_variable() const;
  /// Stack rows of b below a.
  static LMatrix vstack(const LMatrix& a, const LMatrix& b);

  /// Minimum entry valuation (kInfValuation for the zero matrix).
  int min_valuation() const;
  /// Maximum entry degree over nonzero entries (INT_MIN for the zero matrix).
  int max_degree() const;

  LaurentPoly det() const;
  LMatrix adjugate() const;
  bool is_upper_triangular() const;

  bool operator==(const LMatrix& o) const = default;
  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  int rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> a_;
};

/// Valuation of the gcd of all k x k minors (the minimum minor valuation),
/// for k = 1..min(rows, cols). Entry k-1 holds the value for size k.
std::vector<int> minor_valuations(const LMatrix& M);

/// Dense matrix of truncated series.
class SMatrix {
 public:
  SMatrix() = default;
  SMatrix(std::uint32_t p, int rows, int cols, int prec);
  SMatrix(const LMatrix& M, int prec);
  static SMatrix identity(std::uint32_t p, int dim, int prec);

  std::uint32_t prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  TruncSeries& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const TruncSeries& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  friend SMatrix operator*(const SMatrix& a, const SMatrix& b);
  /// Inverse by pivoted Gauss-Jordan elimination over Laurent series.
  SMatrix inverse() const;
  int min_precision() const;
  /// Smallest known valuation over entries (nullopt if all are zero to precision).
  std::optional<int> min_valuation() const;

  LMatrix known_part() const;
  bool agrees_with(const LMatrix& M) const;
  /// True when every known odd-exponent coefficient vanishes.
  bool even_support() const;

 private:
  std::uint32_t p_ = 0;
  int rows_ = 0, cols_ = 0;
  std::vector<TruncSeries> a_;
};

}  // namespace symhecke
