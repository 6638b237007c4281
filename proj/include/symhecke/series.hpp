#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symhecke/laurent.hpp"

namespace symhecke {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent series over F_p known modulo z^prec. Coefficients of exponents in
/// [start, prec) are stored; everything below start is zero.
class TruncSeries {
 public:
  TruncSeries() = default;
  /// Zero known to absolute precision prec.
  TruncSeries(std::uint32_t p, int prec) : p_(p), start_(prec), prec_(prec) {}
  TruncSeries(const LaurentPoly& f, int prec);

  std::uint32_t prime() const { return p_; }
  int precision() const { return prec_; }
  /// Lowest known nonzero exponent, or nullopt when every known coefficient vanishes.
  std::optional<int> valuation() const;
  std::uint32_t coeff(int e) const;
  bool known_zero() const { return !valuation().has_value(); }

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(std::uint32_t c) const;
  TruncSeries shifted(int k) const;
  /// Throws PrecisionError when no coefficient is known to be nonzero.
  TruncSeries inverse() const;
  /// Reduces precision to min(prec, n).
  TruncSeries with_precision(int n) const;

  /// Known part as an exact Laurent polynomial.
  LaurentPoly known_part() const;
  /// Agreement on all coefficients known in both operands.
  bool agrees_with(const TruncSeries& o) const;
  bool agrees_with(const LaurentPoly& f) const;

  /// g(t) with the even part of this series equal to g(z^2).
  TruncSeries even_in_t() const;
  TruncSeries odd_in_t() const;
  /// f(z^2).
  TruncSeries squared_variable() const;

 private:
  void trim();

  std::uint32_t p_ = 0;
  int start_ = 0;
  int prec_ = 0;
  std::vector<std::uint32_t> c_;  // exponents start_ .. prec_-1
};

/// Inverse of f known for exponents up to -v(f) + N inclusive.
TruncSeries series_invert(const LaurentPoly& f, int N);

}  // namespace symhecke
