#include "symhecke/cosets.hpp"

#include <algorithm>
#include <charconv>

namespace symhecke {

namespace {

int parse_int(const std::string& s, const std::string& whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("bad mu '" + whole + "'");
  return v;
}

std::uint64_t checked_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (UINT64_MAX / base)) throw DomainError("coset family too large to index");
    r *= base;
  }
  return r;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int d = 0; d <= total; ++d) {
    cur.push_back(d);
    compositions(total - d, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition MuSpec::partition(int m) const {
  std::vector<int> v(m, 0);
  if (kind == CosetKind::Vertical) {
    for (int i = 0; i < ell; ++i) v[i] = 1;
  } else if (m > 0) {
    v[0] = ell;
  }
  if (negative) {
    for (int& x : v) x = -x;
    std::reverse(v.begin(), v.end());
  }
  return Partition(std::move(v));
}

std::string MuSpec::to_string() const {
  std::string s = negative ? "-" : "";
  if (kind == CosetKind::Vertical) return s + "1^" + std::to_string(ell);
  return s + std::to_string(ell);
}

MuSpec parse_mu(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  MuSpec mu;
  std::size_t pos = 0;
  if (!s.empty() && s[0] == '-') {
    mu.negative = true;
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto caret = body.find('^');
  if (caret != std::string::npos) {
    if (body.substr(0, caret) != "1") throw DomainError("bad mu '" + raw + "': only 1^l is supported");
    mu.kind = CosetKind::Vertical;
    mu.ell = parse_int(body.substr(caret + 1), raw);
  } else {
    mu.kind = CosetKind::Row;
    mu.ell = parse_int(body, raw);
    if (mu.ell == 0 || mu.ell == 1) mu.kind = CosetKind::Vertical;
  }
  if (mu.ell < 0) throw DomainError("bad mu '" + raw + "'");
  return mu;
}

CosetFamily CosetFamily::vertical(int m, int ell, std::uint32_t p) {
  require_odd_prime(p);
  if (m < 1 || ell < 0 || ell > m) throw DomainError("need 0 <= l <= m for vertical representatives");
  CosetFamily f;
  f.kind_ = CosetKind::Vertical;
  f.m_ = m;
  f.ell_ = ell;
  f.p_ = p;
  // Diagonal patterns in lexicographic order of exponents (0 before 1).
  std::vector<int> diag(m, 0);
  std::fill(diag.end() - ell, diag.end(), 1);
  do {
    f.add_pattern(diag);
  } while (std::next_permutation(diag.begin(), diag.end()));
  return f;
}

CosetFamily CosetFamily::row(int m, int ell, std::uint32_t p) {
  require_odd_prime(p);
  if (m < 1 || ell < 0) throw DomainError("need l >= 0 for row representatives");
  CosetFamily f;
  f.kind_ = CosetKind::Row;
  f.m_ = m;
  f.ell_ = ell;
  f.p_ = p;
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(ell, m, cur, comps);
  for (auto& d : comps) f.add_pattern(d);
  return f;
}

CosetFamily CosetFamily::from_mu(int m, const MuSpec& mu, std::uint32_t p) {
  return mu.kind == CosetKind::Vertical ? vertical(m, mu.ell, p) : row(m, mu.ell, p);
}

void CosetFamily::add_pattern(std::vector<int> diag) {
  Pattern pat;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) {
      int n = 0;
      if (kind_ == CosetKind::Vertical)
        n = (diag[i] == 0 && diag[j] == 1) ? 1 : 0;
      else
        n = diag[j];
      if (n > 0) pat.slots.push_back({i, j, n});
    }
  int digits = 0;
  for (const auto& s : pat.slots) digits += s.ncoef;
  pat.size = checked_pow(p_, digits);
  pat.offset = total_;
  pat.diag = std::move(diag);
  if (total_ > UINT64_MAX - pat.size) throw DomainError("coset family too large to index");
  total_ += pat.size;
  patterns_.push_back(std::move(pat));
}

Partition CosetFamily::mu() const { return MuSpec{kind_, ell_, false}.partition(m_); }

QPoly CosetFamily::expected_count() const { return coset_count(m_, mu()); }

bool CosetFamily::accept(const LMatrix& X) const {
  if (kind_ == CosetKind::Vertical || ell_ == 0) return true;
  return rank_mod_z(X) == m_ - 1;
}

std::optional<LMatrix> CosetFamily::candidate(std::uint64_t index) const {
  if (index >= total_) throw DomainError("coset index out of range");
  auto it = std::upper_bound(patterns_.begin(), patterns_.end(), index,
                             [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
  const Pattern& pat = *(it - 1);
  std::uint64_t local = index - pat.offset;
  LMatrix X(p_, m_);
  for (int i = 0; i < m_; ++i) X(i, i) = LaurentPoly::monomial(p_, pat.diag[i]);
  // The last coefficient of the last slot varies fastest.
  for (auto s = pat.slots.rbegin(); s != pat.slots.rend(); ++s) {
    std::vector<std::uint32_t> c(s->ncoef);
    for (int k = s->ncoef - 1; k >= 0; --k) {
      c[k] = static_cast<std::uint32_t>(local % p_);
      local /= p_;
    }
    X(s->row, s->col) = LaurentPoly::from_dense(p_, 0, std::move(c));
  }
  if (!accept(X)) return std::nullopt;
  return X;
}

void CosetFamily::for_each(std::uint64_t begin, std::uint64_t end,
                           const std::function<void(const LMatrix&)>& f) const {
  end = std::min(end, total_);
  for (std::uint64_t i = begin; i < end; ++i)
    if (auto X = candidate(i)) f(*X);
}

std::vector<LMatrix> CosetFamily::materialize(std::uint64_t limit) const {
  std::vector<LMatrix> out;
  for (std::uint64_t i = 0; i < total_; ++i) {
    if (limit != 0 && out.size() >= limit) break;
    if (auto X = candidate(i)) out.push_back(std::move(*X));
  }
  return out;
}

std::uint64_t CosetFamily::count() const {
  if (kind_ == CosetKind::Vertical) return total_;
  std::uint64_t n = 0;
  for_each([&](const LMatrix&) { ++n; });
  return n;
}

CosetFamily enum_vertical_reps(int m, int ell, std::uint32_t p) { return CosetFamily::vertical(m, ell, p); }
CosetFamily enum_row_reps(int m, int ell, std::uint32_t p) { return CosetFamily::row(m, ell, p); }

QPoly coset_count(int m, const Partition& mu) {
  if (mu.length() != m) throw DomainError("mu must have length m");
  const auto& v = mu.parts();
  const int nonzero = m - mu.multiplicity(0);
  if (nonzero == 0) return QPoly(1);
  if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0 || x == 1; }))
    return q_binomial(m, nonzero);
  if (nonzero == 1 && v[0] > 0) return q_pow((m - 1) * (v[0] - 1)) * q_int(m);
  throw DomainError("coset_count supports mu = {1^l} or {l} only, got " + mu.to_string());
}

int rank_mod_z(const LMatrix& X) {
  const std::uint32_t p = X.prime();
  const int r = X.rows(), c = X.cols();
  std::vector<std::vector<std::uint32_t>> a(r, std::vector<std::uint32_t>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (X(i, j).valuation() < 0) throw DomainError("rank_mod_z needs entries in F_p[[z]]");
      a[i][j] = X(i, j).coeff(0);
    }
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const std::uint32_t inv = modp::inv(a[rank][col], p);
    for (int i = rank + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint32_t f = modp::mul(a[i][col], inv, p);
      for (int j = col; j < c; ++j) a[i][j] = modp::sub(a[i][j], modp::mul(f, a[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace symhecke
