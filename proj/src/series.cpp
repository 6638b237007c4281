#include "symhecke/series.hpp"

#include <algorithm>

namespace symhecke {

namespace {
int floor_div2(int e) { return e >= 0 ? e / 2 : -((1 - e) / 2); }
int ceil_div2(int e) { return -floor_div2(-e); }
}  // namespace

TruncSeries::TruncSeries(const LaurentPoly& f, int prec) : p_(f.prime()), prec_(prec) {
  if (f.is_zero() || f.valuation() >= prec) {
    start_ = prec;
    return;
  }
  start_ = f.valuation();
  c_.assign(prec - start_, 0);
  for (auto [e, c] : f.terms())
    if (e < prec) c_[e - start_] = c;
}

void TruncSeries::trim() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b) {
    c_.erase(c_.begin(), c_.begin() + b);
    start_ += static_cast<int>(b);
  }
  if (c_.empty()) start_ = prec_;
}

std::optional<int> TruncSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return start_ + static_cast<int>(i);
  return std::nullopt;
}

std::uint32_t TruncSeries::coeff(int e) const {
  if (e >= prec_) throw PrecisionError("coefficient beyond known precision");
  if (e < start_) return 0;
  return c_[e - start_];
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = modp::neg(x, p_);
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r;
  r.p_ = a.p_ ? a.p_ : b.p_;
  r.prec_ = std::min(a.prec_, b.prec_);
  r.start_ = std::min({a.start_, b.start_, r.prec_});
  r.c_.assign(r.prec_ - r.start_, 0);
  for (int e = r.start_; e < r.prec_; ++e) {
    std::uint32_t x = (e >= a.start_) ? a.c_[e - a.start_] : 0;
    std::uint32_t y = (e >= b.start_) ? b.c_[e - b.start_] : 0;
    r.c_[e - r.start_] = modp::add(x, y, r.p_);
  }
  r.trim();
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r;
  r.p_ = a.p_ ? a.p_ : b.p_;
  auto va = a.valuation();
  auto vb = b.valuation();
  // An operand that is zero to its precision contributes its precision as a lower bound.
  int la = va ? *va : a.prec_;
  int lb = vb ? *vb : b.prec_;
  r.prec_ = std::min(la + b.prec_, lb + a.prec_);
  if (!va || !vb) {
    r.start_ = r.prec_;
    return r;
  }
  r.start_ = la + lb;
  if (r.start_ >= r.prec_) {
    r.start_ = r.prec_;
    return r;
  }
  const std::uint32_t p = r.p_;
  const int n = r.prec_ - r.start_;
  std::vector<std::uint64_t> acc(n, 0);
  const std::uint64_t limit = ~0ULL - static_cast<std::uint64_t>(p) * p;
  const int ao = la - a.start_;
  const int bo = lb - b.start_;
  const int na = std::min<int>(n, static_cast<int>(a.c_.size()) - ao);
  const int nb = std::min<int>(n, static_cast<int>(b.c_.size()) - bo);
  for (int i = 0; i < na; ++i) {
    std::uint64_t x = a.c_[ao + i];
    if (!x) continue;
    for (int j = 0; j < nb && i + j < n; ++j) {
      auto& s = acc[i + j];
      s += x * b.c_[bo + j];
      if (s > limit) s %= p;
    }
  }
  r.c_.resize(n);
  for (int i = 0; i < n; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
  r.trim();
  return r;
}

TruncSeries TruncSeries::scaled(std::uint32_t c) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = modp::mul(x, c % p_, p_);
  r.trim();
  return r;
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries r = *this;
  r.start_ += k;
  r.prec_ += k;
  return r;
}

TruncSeries TruncSeries::with_precision(int n) const {
  if (n >= prec_) return *this;
  TruncSeries r = *this;
  r.prec_ = n;
  if (r.start_ >= n) {
    r.start_ = n;
    r.c_.clear();
  } else {
    r.c_.resize(n - r.start_);
  }
  r.trim();
  return r;
}

TruncSeries TruncSeries::inverse() const {
  auto v = valuation();
  if (!v) throw PrecisionError("series inverse: no known nonzero coefficient");
  const int rel = prec_ - *v;
  const std::uint32_t p = p_;
  const std::uint32_t* f = c_.data() + (*v - start_);
  std::vector<std::uint32_t> g(rel, 0);
  const std::uint32_t inv0 = modp::inv(f[0], p);
  g[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    std::uint64_t s = 0;
    for (int j = 1; j <= k; ++j) s = (s + static_cast<std::uint64_t>(f[j]) * g[k - j]) % p;
    g[k] = modp::mul(modp::neg(static_cast<std::uint32_t>(s), p), inv0, p);
  }
  TruncSeries r;
  r.p_ = p;
  r.start_ = -*v;
  r.prec_ = -*v + rel;
  r.c_ = std::move(g);
  return r;
}

LaurentPoly TruncSeries::known_part() const { return LaurentPoly::from_dense(p_, start_, c_); }

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  int n = std::min(prec_, o.prec_);
  int lo = std::min(start_, o.start_);
  for (int e = lo; e < n; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

bool TruncSeries::agrees_with(const LaurentPoly& f) const {
  if (!f.is_zero() && f.valuation() < start_) return false;
  for (int e = start_; e < prec_; ++e)
    if (coeff(e) != f.coeff(e)) return false;
  return true;
}

TruncSeries TruncSeries::even_in_t() const {
  TruncSeries r;
  r.p_ = p_;
  r.prec_ = ceil_div2(prec_);
  r.start_ = std::min(ceil_div2(start_), r.prec_);
  r.c_.assign(r.prec_ - r.start_, 0);
  for (int k = r.start_; k < r.prec_; ++k) r.c_[k - r.start_] = coeff(2 * k);
  r.trim();
  return r;
}

TruncSeries TruncSeries::odd_in_t() const {
  TruncSeries r;
  r.p_ = p_;
  r.prec_ = floor_div2(prec_);
  r.start_ = std::min(ceil_div2(start_ - 1), r.prec_);
  r.c_.assign(r.prec_ - r.start_, 0);
  for (int k = r.start_; k < r.prec_; ++k) r.c_[k - r.start_] = coeff(2 * k + 1);
  r.trim();
  return r;
}

TruncSeries TruncSeries::squared_variable() const {
  TruncSeries r;
  r.p_ = p_;
  r.start_ = 2 * start_;
  r.prec_ = 2 * prec_;
  r.c_.assign(r.prec_ - r.start_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int e = 2 * (start_ + static_cast<int>(i)) - r.start_;
    if (e < static_cast<int>(r.c_.size())) r.c_[e] = c_[i];
  }
  r.trim();
  return r;
}

TruncSeries series_invert(const LaurentPoly& f, int N) {
  if (f.is_zero()) throw DomainError("series_invert of zero");
  const int v = f.valuation();
  // Relative precision N+1 gives coefficients through z^{-v+N}.
  TruncSeries s(f, v + N + 1);
  return s.inverse();
}

}  // namespace symhecke
