#include "symhecke/coweight.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symhecke {

namespace {
int mod2(int v) { return ((v % 2) + 2) % 2; }

std::vector<int> minor_sums(const LMatrix& M) {
  if (!M.square()) throw DomainError("square matrix required");
  auto s = minor_valuations(M);
  if (s.empty() || s.back() == kInfValuation) throw SingularMatrixError("matrix is singular");
  return s;
}
}  // namespace

Partition dominant_coweight(const LMatrix& M) {
  auto s = minor_sums(M);
  const int m = M.dim();
  std::vector<int> parts(m);
  int prev = 0;
  for (int k = 1; k <= m; ++k) {
    parts[m - k] = s[k - 1] - prev;
    prev = s[k - 1];
  }
  return Partition(std::move(parts));
}

HatInvariants hat_invariants(const LMatrix& B) {
  LaurentPoly d = B.det();
  if (d.is_zero()) throw SingularMatrixError("matrix is singular");
  const LMatrix Br = B.reflected();
  const LMatrix M = B * Br.adjugate();
  const int vd = d.valuation();  // v(det B(-z)) = v(det B)
  HatInvariants h;
  const Partition rho = dominant_coweight(M);
  for (int part : rho.parts())
    if (part - vd > 0) h.big_parts.push_back(part - vd + 1);
  h.parity = mod2(vd);
  return h;
}

int projection_defect(const LMatrix& B) {
  const LMatrix B0 = B.even_in_t();
  const LMatrix B1 = B.odd_in_t();
  const LaurentPoly t = LaurentPoly::monomial(B.prime(), 1);
  auto v0 = minor_valuations(LMatrix::vstack(B0, B1.scaled_by(t)));
  auto v1 = minor_valuations(LMatrix::vstack(B1, B0));
  if (v0.back() == kInfValuation || v1.back() == kInfValuation) throw SingularMatrixError("matrix is singular");
  return v0.back() - v1.back();
}

SymCoweight sigma_from_invariants(const LMatrix& B) {
  HatInvariants h = hat_invariants(B);
  const int m = B.dim();
  SymCoweight s;
  s.big_parts = h.big_parts;
  const int nb = static_cast<int>(s.big_parts.size());
  s.count_z = projection_defect(B) - nb;
  s.count_one = m - 2 * nb - s.count_z;
  const int sum_big = std::accumulate(s.big_parts.begin(), s.big_parts.end(), 0);
  if (s.count_z < 0 || s.count_one < 0 || mod2(s.count_z + sum_big) != h.parity)
    throw std::logic_error("symmetric coweight invariants are inconsistent for " + B.to_string());
  return s;
}

LMatrix canonical_matrix(std::uint32_t p, const SymCoweight& s) {
  const int m = s.dim();
  LMatrix L(p, m);
  int i = 0;
  for (int k = 0; k < s.count_one; ++k, ++i) L(i, i) = LaurentPoly::monomial(p, 0);
  for (int k = 0; k < s.count_z; ++k, ++i) L(i, i) = LaurentPoly::monomial(p, 1);
  auto big = s.big_parts;
  std::sort(big.begin(), big.end(), std::greater<>());
  for (int a : big) {
    L(i, i) = LaurentPoly::monomial(p, 0);
    L(i, i + 1) = LaurentPoly::monomial(p, 1);
    L(i + 1, i + 1) = LaurentPoly::monomial(p, a);
    i += 2;
  }
  return L;
}

std::optional<SymCoweight> read_block_form(const LMatrix& L) {
  if (!L.square()) return std::nullopt;
  const int m = L.dim();
  const std::uint32_t p = L.prime();
  auto is_mono = [&](const LaurentPoly& f, int e) { return f == LaurentPoly::monomial(p, e); };
  SymCoweight s;
  int i = 0;
  while (i < m) {
    // Everything outside the current block in rows/cols i.. must vanish.
    bool two = i + 1 < m && !L(i, i + 1).is_zero();
    int w = two ? 2 : 1;
    for (int r = i; r < i + w; ++r)
      for (int c = 0; c < m; ++c) {
        if (c >= i && c < i + w) continue;
        if (!L(r, c).is_zero() || !L(c, r).is_zero()) return std::nullopt;
      }
    if (two) {
      int a = L(i + 1, i + 1).valuation();
      if (!is_mono(L(i, i), 0) || !is_mono(L(i, i + 1), 1) || !L(i + 1, i).is_zero() || a < 2 ||
          !is_mono(L(i + 1, i + 1), a))
        return std::nullopt;
      s.big_parts.push_back(a);
    } else if (is_mono(L(i, i), 0)) {
      ++s.count_one;
    } else if (is_mono(L(i, i), 1)) {
      ++s.count_z;
    } else {
      return std::nullopt;
    }
    i += w;
  }
  std::sort(s.big_parts.begin(), s.big_parts.end(), std::greater<>());
  return s;
}

int policy_precision(const LMatrix& B) {
  const int lo = std::min(0, B.min_valuation());
  const int hi = std::max(0, B.max_degree());
  return 2 * B.dim() * (hi - lo) + 8;
}

bool vertical_strip(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return false;
  for (int i = 0; i < a.length(); ++i)
    if (b[i] < a[i] - 1 || b[i] > a[i] + 1) return false;
  return true;
}

bool interlaces(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return false;
  const int m = a.length();
  for (int i = 0; i < m; ++i) {
    if (i + 1 < m && b[i] < a[i + 1]) return false;
    if (i >= 1 && b[i] > a[i - 1]) return false;
  }
  return true;
}

bool pieri_check(const LMatrix& A, const LMatrix& B) {
  const Partition rho = dominant_coweight(A);
  for (int x : rho.parts())
    if (x != 0 && x != 1) throw DomainError("pieri_check: rho(A) must be {1^l, 0^(m-l)}");
  return vertical_strip(symmetric_coweight(B).padded(), symmetric_coweight(A * B).padded());
}

bool dual_pieri_check(const LMatrix& A, const LMatrix& B) {
  auto r = dominant_coweight(A).parts();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) throw DomainError("dual_pieri_check: rho(A) must be {l, 0^(m-1)}");
  if (r.empty() || r[0] < 0) throw DomainError("dual_pieri_check: rho(A) must be {l, 0^(m-1)}");
  return interlaces(symmetric_coweight(B).padded(), symmetric_coweight(A * B).padded());
}

}  // namespace symhecke
