#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symhecke/field.hpp"

namespace symhecke {

/// Valuation sentinel for the zero element.
inline constexpr int kInfValuation = INT_MAX;

/// Finitely supported Laurent polynomial over F_p, stored densely between the
/// lowest and highest nonzero exponents.
///
/// A default-constructed value is the zero polynomial with no modulus attached;
/// it combines with polynomials of any modulus.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::uint32_t p) : p_(p) {}
  /// c * z^e, with c reduced mod p.
  static LaurentPoly monomial(std::uint32_t p, int e, std::int64_t c = 1);
  static LaurentPoly constant(std::uint32_t p, std::int64_t c) { return monomial(p, 0, c); }
  /// From (exponent, coefficient) pairs; coefficients are reduced mod p and
  /// repeated exponents accumulate.
  static LaurentPoly from_terms(std::uint32_t p,
                                const std::vector<std::pair<int, std::int64_t>>& terms);
  /// Dense coefficients c[0] z^lo + c[1] z^(lo+1) + ...
  static LaurentPoly from_dense(std::uint32_t p, int lo, std::vector<std::uint32_t> c);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int valuation() const { return c_.empty() ? kInfValuation : lo_; }
  /// Highest exponent; meaningless for zero.
  int degree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::uint32_t coeff(int e) const;
  std::uint32_t leading_low() const { return c_.empty() ? 0 : c_.front(); }
  std::vector<std::pair<int, std::uint32_t>> terms() const;
  std::size_t term_count() const;
  const std::vector<std::uint32_t>& dense() const { return c_; }
  int low() const { return lo_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(std::uint32_t c) const;
  /// Multiplication by z^k.
  LaurentPoly shifted(int k) const;
  /// f(-z).
  LaurentPoly reflected() const;
  /// Terms with even exponents.
  LaurentPoly even_part() const;
  /// Terms with odd exponents.
  LaurentPoly odd_part() const;
  /// g(t) with f_even(z) = g(z^2).
  LaurentPoly even_in_t() const;
  /// g(t) with f_odd(z) = z * g(z^2).
  LaurentPoly odd_in_t() const;
  /// f(z^2).
  LaurentPoly squared_variable() const;
  /// Terms with exponent < n.
  LaurentPoly truncated(int n) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator<(const LaurentPoly& o) const;

  std::string to_string() const;

 private:
  void normalize();
  std::uint32_t join_prime(const LaurentPoly& o) const;

  std::uint32_t p_ = 0;
  int lo_ = 0;
  std::vector<std::uint32_t> c_;
};

}  // namespace symhecke
