#include "symhecke/formulas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "symhecke/field.hpp"

namespace symhecke {

namespace {

const QPoly& q_minus_one() {
  static const QPoly v = QPoly::from_terms({{1, 1}, {0, -1}});
  return v;
}

QPoly q_signed_pow(long long e, const char* what) {
  if (e < 0) throw std::logic_error(std::string(what) + " produced q^" + std::to_string(e));
  return q_pow(static_cast<int>(e));
}

void for_each_composition(int total, const std::vector<int>& caps, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& f) {
  const std::size_t i = cur.size();
  if (i == caps.size()) {
    if (total == 0) f(cur);
    return;
  }
  for (int e = 0; e <= std::min(total, caps[i]); ++e) {
    cur.push_back(e);
    for_each_composition(total - e, caps, cur, f);
    cur.pop_back();
  }
}

QPoly class_term(const TupleClass& c, const PaddedShape& nu) {
  const SymCoweight s = nu.coweight();
  QPoly term = q_signed_pow(tuple_exponent(c.omega, nu), "tuple exponent");
  const auto& one = c.omega.one;
  term *= h_compute1(s.count_one, s.count_z, one.pairs, one.one_to_zero, one.zero_to_one);
  for (const auto& e : c.omega.big) term *= h_tilde(nu.multiplicity(e.value), e.w11, e.plus, e.minus);
  return term;
}

}  // namespace

QPoly h_tilde(int n, int i, int j, int k) {
  if (n < 0 || i < 0 || j < 0 || k < 0 || i + j + k > n) return QPoly();
  return q_multinomial(n, {i, j, k});
}

QPoly h_computen(int n, int i, int j, int k) {
  if (n < 0 || i < 0 || j < 0 || k < 0 || i + j + k > n) return QPoly();
  return q_pow(n * (i + j) - i * (i + j + k)) * q_multinomial(n, {i, j, k});
}

QPoly h_compute1(int n1, int n2, int A, int B, int C) {
  if (n1 < 0 || n2 < 0) throw DomainError("h_compute1 needs n1, n2 >= 0");
  if (A < 0 || B < 0 || C < 0 || C > n1 || A > n1 - C || A + B > n2) return QPoly();
  return q_pow(A * (A - 1) / 2) * q_minus_one().pow(A) * q_falling(n1 - C, A) * q_multinomial(n2, {A, B}) *
         q_binomial(n1, C);
}

QPoly h_mainthm(int ell, const PaddedShape& nu, const PaddedShape& lambda) {
  QPoly total;
  for (const auto& c : enum_paired_tuples(ell, nu, lambda)) total += class_term(c, nu);
  return total;
}

std::map<SymCoweight, QPoly> h_mainthm_all(int ell, const PaddedShape& nu) {
  std::map<SymCoweight, QPoly> out;
  for (const auto& [lam, classes] : paired_tuple_classes(ell, nu)) {
    QPoly total;
    for (const auto& c : classes) total += class_term(c, nu);
    if (!total.is_zero()) out[lam] = total;
  }
  return out;
}

bool corollary_applies(const PaddedShape& nu) {
  if (nu.t1() != 0) return false;
  auto v = nu.big_values();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] < 2) return false;
  return true;
}

QPoly h_corollary(int ell, const PaddedShape& nu, const PaddedShape& lambda) {
  if (!corollary_applies(nu))
    throw DomainError("corollary needs no one-dimensional blocks and parts differing by at least 2, got " +
                      nu.to_string());
  auto classes = enum_paired_tuples(ell, nu, lambda);
  if (classes.empty()) return QPoly();
  const auto& first = classes.front().omega.big;
  for (const auto& c : classes)
    for (std::size_t a = 0; a < first.size(); ++a)
      if (c.omega.big[a].plus != first[a].plus || c.omega.big[a].minus != first[a].minus)
        throw DomainError("moved-block statistics are not fixed across classes");

  const std::size_t J = first.size();
  std::vector<int> n(J), om10(J), om01(J), m(J);
  int moved = 0;
  for (std::size_t a = 0; a < J; ++a) {
    n[a] = nu.multiplicity(first[a].value);
    om10[a] = first[a].minus;
    om01[a] = first[a].plus;
    m[a] = n[a] - om10[a] - om01[a];
    moved += om10[a] + om01[a];
  }
  if ((ell - moved) % 2 != 0) return QPoly();
  const int M = (ell - moved) / 2;

  long long r = 0;
  for (std::size_t a = 0; a < J; ++a) {
    r += static_cast<long long>(n[a]) * om01[a];
    for (std::size_t b = a + 1; b < J; ++b) r += static_cast<long long>(n[a]) * (n[b] + om01[b] - om10[b]);
  }
  QPoly prefix(1);
  for (std::size_t a = 0; a < J; ++a) prefix *= q_multinomial(n[a], {om10[a], om01[a]});

  long long sum_m = 0;
  for (int x : m) sum_m += x;
  QPoly sum;
  std::vector<int> cur;
  for_each_composition(M, m, cur, [&](const std::vector<int>& e) {
    long long twice = -(sum_m - 2 * M) * (sum_m - 2 * M);
    QPoly t(1);
    for (std::size_t a = 0; a < J; ++a) {
      twice += static_cast<long long>(m[a]) * m[a] + 2LL * e[a] * (e[a] - m[a]);
      t *= q_binomial(m[a], e[a]);
    }
    if (twice % 2 != 0) throw std::logic_error("corollary exponent is not an integer");
    sum += q_signed_pow(r + twice / 2, "corollary exponent") * t;
  });
  return prefix * sum;
}

QPoly h_young(int ell, const PaddedShape& nu, const PaddedShape& lambda) {
  QPoly total;
  for (const auto& d : enum_paired_diagrams(ell, nu, lambda))
    for (const auto& t : enum_tableaux(d)) total += tableau_weight(t);
  return total;
}

std::map<SymCoweight, QPoly> h_young_all(int ell, const PaddedShape& nu) {
  std::map<SymCoweight, QPoly> out;
  for (const auto& d : enum_paired_diagrams(ell, nu)) {
    QPoly total;
    for (const auto& t : enum_tableaux(d)) total += tableau_weight(t);
    if (!total.is_zero()) out[d.reduced_shape()] += total;
  }
  return out;
}

QPoly p_dual(int n, int ell, int i, int j) {
  if (n < 2) throw DomainError("p_dual needs n >= 2");
  if (ell < 1) throw DomainError("p_dual needs l >= 1");
  if (i < 0 || j < 0) throw DomainError("p_dual needs i, j >= 0");
  if (i + j > ell || (ell - i - j) % 2 != 0) return QPoly();
  const QPoly qn = q_int(n);
  const QPoly& d = q_minus_one();
  if (i >= 1 && j >= 1) {
    if (i + j < ell) return q_pow((ell + i - 2) * n - (ell + i + j) / 2 + 1) * qn * q_int(n - 1) * d * d;
    return q_pow((ell + i - 2) * n - ell + 2) * qn * q_int(n - 1) * d;
  }
  if (j == 0 && i == ell) return q_pow((2 * ell - 1) * n - (ell - 1)) * qn;
  if (j == 0 && i > 0) return q_pow((ell + i - 1) * n - (ell + i) / 2) * qn * d;
  if (i == 0 && j == ell) return q_pow((ell - 1) * n - (ell - 1)) * qn;
  if (i == 0 && j > 0) return q_pow((ell - 1) * n - (ell + j) / 2) * qn * d;
  return q_pow((ell - 1) * n - ell / 2) * qn * d;
}

QPoly h_dual1(int ell, int j) {
  if (ell < 0 || j > ell || j < -ell || ((ell - j) % 2 + 2) % 2 != 0)
    throw DomainError("h_dual1 needs |j| <= l and j = l mod 2");
  if (j == ell) return q_pow(ell);
  if (j == -ell) return QPoly(1);
  return q_pow((j + ell) / 2 - 1) * q_minus_one();
}

}  // namespace symhecke
