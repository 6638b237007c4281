#include "symhecke/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symhecke {

LaurentPoly LaurentPoly::monomial(std::uint32_t p, int e, std::int64_t c) {
  LaurentPoly f(p);
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r != 0) {
    f.lo_ = e;
    f.c_.push_back(static_cast<std::uint32_t>(r));
  }
  return f;
}

LaurentPoly LaurentPoly::from_terms(std::uint32_t p,
                                    const std::vector<std::pair<int, std::int64_t>>& terms) {
  LaurentPoly f(p);
  for (auto [e, c] : terms) f += monomial(p, e, c);
  return f;
}

LaurentPoly LaurentPoly::from_dense(std::uint32_t p, int lo, std::vector<std::uint32_t> c) {
  LaurentPoly f(p);
  f.lo_ = lo;
  f.c_ = std::move(c);
  for (auto& x : f.c_) x %= p;
  f.normalize();
  return f;
}

void LaurentPoly::normalize() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<std::uint32_t>(c_.begin() + b, c_.begin() + e);
    lo_ += static_cast<int>(b);
  }
}

std::uint32_t LaurentPoly::join_prime(const LaurentPoly& o) const {
  if (p_ && o.p_ && p_ != o.p_) throw std::invalid_argument("mixing Laurent polynomials over different fields");
  return p_ ? p_ : o.p_;
}

std::uint32_t LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > degree()) return 0;
  return c_[e - lo_];
}

std::vector<std::pair<int, std::uint32_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::uint32_t>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto x) { return x != 0; }));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = modp::neg(x, p_);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  p_ = join_prime(o);
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    lo_ = o.lo_;
    c_ = o.c_;
    return *this;
  }
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(degree(), o.degree());
  if (lo < lo_ || hi > degree()) {
    std::vector<std::uint32_t> n(hi - lo + 1, 0);
    std::copy(c_.begin(), c_.end(), n.begin() + (lo_ - lo));
    c_ = std::move(n);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& x = c_[o.lo_ - lo_ + i];
    x = modp::add(x, o.c_[i], p_);
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.join_prime(b));
  if (a.c_.empty() || b.c_.empty()) return r;
  const std::uint32_t p = r.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  // Accumulate in 64 bits and reduce periodically to avoid overflow.
  const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
  const std::uint64_t limit = ~0ULL - pp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      auto& s = acc[i + j];
      s += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
      if (s > limit) s %= p;
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
  r.lo_ = a.lo_ + b.lo_;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::scaled(std::uint32_t c) const {
  LaurentPoly r = *this;
  c %= p_ ? p_ : 1;
  for (auto& x : r.c_) x = modp::mul(x, c, p_);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    if ((lo_ + static_cast<int>(i)) & 1) r.c_[i] = modp::neg(r.c_[i], p_);
  return r;
}

LaurentPoly LaurentPoly::even_part() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    if ((lo_ + static_cast<int>(i)) & 1) r.c_[i] = 0;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::odd_part() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    if (!((lo_ + static_cast<int>(i)) & 1)) r.c_[i] = 0;
  r.normalize();
  return r;
}

namespace {
int floor_div2(int e) { return e >= 0 ? e / 2 : -((1 - e) / 2); }
}  // namespace

LaurentPoly LaurentPoly::even_in_t() const {
  LaurentPoly r(p_);
  if (c_.empty()) return r;
  int first = lo_ + (lo_ & 1);
  if (first > degree()) return r;
  r.lo_ = floor_div2(first);
  for (int e = first; e <= degree(); e += 2) r.c_.push_back(c_[e - lo_]);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::odd_in_t() const {
  LaurentPoly r(p_);
  if (c_.empty()) return r;
  int first = (lo_ & 1) ? lo_ : lo_ + 1;
  if (first > degree()) return r;
  r.lo_ = floor_div2(first - 1);
  for (int e = first; e <= degree(); e += 2) r.c_.push_back(c_[e - lo_]);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::squared_variable() const {
  LaurentPoly r(p_);
  if (c_.empty()) return r;
  r.lo_ = 2 * lo_;
  r.c_.assign(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
  return r;
}

LaurentPoly LaurentPoly::truncated(int n) const {
  LaurentPoly r(p_);
  if (c_.empty() || n <= lo_) return r;
  r.lo_ = lo_;
  r.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), n - lo_));
  r.normalize();
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
  return lo_ == o.lo_ && c_ == o.c_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (c_.empty() || o.c_.empty()) return c_.empty() && !o.c_.empty();
  if (lo_ != o.lo_) return lo_ < o.lo_;
  return c_ < o.c_;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace symhecke
