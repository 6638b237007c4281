#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symhecke {

/// Polynomial in q with integer coefficients and nonnegative degrees.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t c);  // NOLINT: constants convert implicitly
  /// c * q^e; negative e is a domain error.
  static QPoly monomial(int e, std::int64_t c = 1);
  static QPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);
  static QPoly q() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const;
  std::vector<std::pair<int, std::int64_t>> terms() const;
  bool nonnegative_coefficients() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  QPoly pow(unsigned k) const;

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator<(const QPoly& o) const;

  /// Exact value at q = q0; throws std::overflow_error beyond 64 bits.
  std::int64_t eval(std::int64_t q0) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

std::int64_t qpoly_eval(const QPoly& P, std::int64_t q0);

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0. Negative n is a domain error.
QPoly q_int(int n);
/// [n]! = [1][2]...[n].
QPoly q_factorial(int n);
/// Gaussian binomial; zero outside 0 <= k <= n.
QPoly q_binomial(int n, int k);
/// [n]! / (prod [a_i]! * [n - sum a_i]!); zero if a part is negative or the
/// parts sum past n.
QPoly q_multinomial(int n, const std::vector<int>& parts);
/// [n][n-1]...[n-k+1]; [n]_0 = 1.
QPoly q_falling(int n, int k);
/// q^e for e >= 0.
QPoly q_pow(int e);

}  // namespace symhecke
