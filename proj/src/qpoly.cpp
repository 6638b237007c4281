#include "symhecke/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "symhecke/field.hpp"

namespace symhecke {

QPoly::QPoly(std::int64_t c) {
  if (c) c_.push_back(c);
}

QPoly QPoly::monomial(int e, std::int64_t c) {
  if (e < 0) throw DomainError("negative power of q: " + std::to_string(e));
  QPoly r;
  if (c) {
    r.c_.assign(e + 1, 0);
    r.c_[e] = c;
  }
  return r;
}

QPoly QPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  QPoly r;
  for (auto [e, c] : terms) r += monomial(e, c);
  return r;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t QPoly::coeff(int e) const {
  return (e < 0 || e >= static_cast<int>(c_.size())) ? 0 : c_[e];
}

std::vector<std::pair<int, std::int64_t>> QPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) out.emplace_back(static_cast<int>(i), c_[i]);
  return out;
}

bool QPoly::nonnegative_coefficients() const {
  for (auto c : c_)
    if (c < 0) return false;
  return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      std::int64_t t;
      if (__builtin_mul_overflow(c_[i], o.c_[j], &t) || __builtin_add_overflow(r[i + j], t, &r[i + j]))
        throw std::overflow_error("QPoly coefficient overflow");
    }
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool QPoly::operator<(const QPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::int64_t QPoly::eval(std::int64_t q0) const {
  std::int64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (__builtin_mul_overflow(r, q0, &r) || __builtin_add_overflow(r, c_[i], &r))
      throw std::overflow_error("QPoly evaluation overflow");
  }
  return r;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    std::int64_t c = c_[i];
    if (!c) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::int64_t qpoly_eval(const QPoly& P, std::int64_t q0) { return P.eval(q0); }

QPoly q_pow(int e) { return QPoly::monomial(e); }

QPoly q_int(int n) {
  if (n < 0) throw DomainError("q-integer of negative argument");
  QPoly r;
  for (int i = 0; i < n; ++i) r += QPoly::monomial(i);
  return r;
}

QPoly q_factorial(int n) {
  if (n < 0) throw DomainError("q-factorial of negative argument");
  QPoly r(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return QPoly();
  static std::mutex mu;
  static std::map<std::pair<int, int>, QPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  QPoly r;
  if (k == 0 || k == n) {
    r = QPoly(1);
  } else {
    r = q_binomial(n - 1, k) + QPoly::monomial(n - k) * q_binomial(n - 1, k - 1);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(n, k), r);
  return r;
}

QPoly q_multinomial(int n, const std::vector<int>& parts) {
  int rest = n;
  QPoly r(1);
  for (int a : parts) {
    if (a < 0 || a > rest) return QPoly();
    r *= q_binomial(rest, a);
    rest -= a;
  }
  return r;
}

QPoly q_falling(int n, int k) {
  if (k < 0) throw DomainError("negative length in q-falling product");
  QPoly r(1);
  for (int i = 0; i < k; ++i) {
    if (n - i <= 0) return QPoly();
    r *= q_int(n - i);
  }
  return r;
}

}  // namespace symhecke
