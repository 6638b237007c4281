#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "symhecke/field.hpp"
#include "symhecke/laurent.hpp"
#include "symhecke/qpoly.hpp"
#include "symhecke/series.hpp"

using namespace symhecke;

namespace {

// Integer polynomials as plain coefficient vectors, for oracles.
using IPoly = std::vector<long long>;

IPoly imul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division; fails the test on a nonzero remainder.
IPoly idiv(IPoly a, const IPoly& b) {
  IPoly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (long long c : a) EXPECT_EQ(c, 0);
  return q;
}

IPoly ifact(int n) {
  IPoly r{1};
  for (int k = 1; k <= n; ++k) r = imul(r, IPoly(k, 1));
  return r;
}

QPoly from_ipoly(const IPoly& a) {
  std::vector<std::pair<int, std::int64_t>> t;
  for (std::size_t i = 0; i < a.size(); ++i) t.emplace_back(static_cast<int>(i), a[i]);
  return QPoly::from_terms(t);
}

// Number of subspaces of each dimension of F_q^m, by closing spans of vector tuples.
std::vector<long long> subspace_counts(int m, int q) {
  int size = 1;
  for (int i = 0; i < m; ++i) size *= q;
  auto add = [&](int a, int b) {
    int r = 0, w = 1;
    for (int i = 0; i < m; ++i, a /= q, b /= q, w *= q) r += ((a % q + b % q) % q) * w;
    return r;
  };
  auto scale = [&](int a, int c) {
    int r = 0, w = 1;
    for (int i = 0; i < m; ++i, a /= q, w *= q) r += ((a % q) * c % q) * w;
    return r;
  };
  std::set<std::vector<bool>> spaces;
  std::vector<int> gens;
  std::function<void(int)> rec = [&](int depth) {
    std::vector<bool> in(size, false);
    in[0] = true;
    std::vector<int> elems{0};
    for (int g : gens) {
      std::vector<int> next;
      for (int e : elems)
        for (int c = 1; c < q; ++c) {
          int v = add(e, scale(g, c));
          if (!in[v]) {
            in[v] = true;
            next.push_back(v);
          }
        }
      elems.insert(elems.end(), next.begin(), next.end());
    }
    spaces.insert(in);
    if (depth == m) return;
    for (int v = 1; v < size; ++v) {
      gens.push_back(v);
      rec(depth + 1);
      gens.pop_back();
    }
  };
  rec(0);
  std::vector<long long> counts(m + 1, 0);
  for (const auto& s : spaces) {
    long long n = 0;
    for (bool b : s) n += b;
    int d = 0;
    for (long long x = n; x > 1; x /= q) ++d;
    ++counts[d];
  }
  return counts;
}

}  // namespace

TEST(PrimeField, RejectsEvenAndComposite) {
  EXPECT_THROW(PrimeField(2), DomainError);
  EXPECT_THROW(PrimeField(9), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_NO_THROW(PrimeField(3));
  EXPECT_NO_THROW(PrimeField(7919));
}

TEST(PrimeField, Inverses) {
  PrimeField F(101);
  for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.reduce(-1), 100u);
}

TEST(Laurent, Valuation) {
  EXPECT_EQ(LaurentPoly::from_terms(3, {{2, 1}, {3, 1}}).valuation(), 2);
  EXPECT_EQ(LaurentPoly(3).valuation(), kInfValuation);
  EXPECT_EQ(LaurentPoly::from_terms(3, {{-1, 2}, {0, 1}}).valuation(), -1);
}

TEST(Laurent, CoefficientsReducedAndCancelled) {
  auto f = LaurentPoly::from_terms(3, {{1, 4}, {1, 2}, {2, -1}});
  EXPECT_EQ(f.coeff(1), 0u);
  EXPECT_EQ(f.coeff(2), 2u);
  EXPECT_EQ(f.valuation(), 2);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(Laurent, EvenOddSplit) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::pair<int, std::int64_t>> terms;
    for (int e = -4; e <= 6; ++e)
      if (rng() % 2) terms.emplace_back(e, static_cast<std::int64_t>(rng() % 5));
    auto f = LaurentPoly::from_terms(5, terms);
    EXPECT_EQ(f.even_part() + f.odd_part(), f);
    for (auto [e, c] : f.even_part().terms()) EXPECT_EQ(((e % 2) + 2) % 2, 0);
    for (auto [e, c] : f.odd_part().shifted(-1).terms()) EXPECT_EQ(((e % 2) + 2) % 2, 0);
    EXPECT_EQ(f.even_in_t().squared_variable() + f.odd_in_t().squared_variable().shifted(1), f);
    EXPECT_EQ(f.reflected().reflected(), f);
  }
}

TEST(Series, InvertExamples) {
  auto one = series_invert(LaurentPoly::constant(3, 1), 5);
  EXPECT_TRUE(one.agrees_with(LaurentPoly::constant(3, 1)));
  EXPECT_GE(one.precision(), 5);

  // (1+z)^{-1} = 1 - z + z^2 - z^3 + ..., i.e. 1, 2, 1, 2 mod 3.
  auto g = series_invert(LaurentPoly::from_terms(3, {{0, 1}, {1, 1}}), 3);
  EXPECT_EQ(g.coeff(0), 1u);
  EXPECT_EQ(g.coeff(1), 2u);
  EXPECT_EQ(g.coeff(2), 1u);
  EXPECT_EQ(g.coeff(3), 2u);
  EXPECT_EQ(g.valuation(), 0);

  auto zi = series_invert(LaurentPoly::monomial(3, 1), 3);
  EXPECT_EQ(zi.valuation(), -1);
  EXPECT_TRUE(zi.agrees_with(LaurentPoly::monomial(3, -1)));

  EXPECT_THROW(series_invert(LaurentPoly(3), 3), DomainError);
}

TEST(Series, InverseAgreesWithOne) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<int, std::int64_t>> terms;
    const int lo = static_cast<int>(rng() % 7) - 3;
    terms.emplace_back(lo, 1 + static_cast<std::int64_t>(rng() % 6));
    for (int e = lo + 1; e <= lo + 5; ++e) terms.emplace_back(e, static_cast<std::int64_t>(rng() % 7));
    auto f = LaurentPoly::from_terms(7, terms);
    const int N = 2 + static_cast<int>(rng() % 8);
    auto g = series_invert(f, N);
    EXPECT_EQ(g.valuation(), -f.valuation());
    auto prod = TruncSeries(f, f.valuation() + 40) * g;
    EXPECT_TRUE(prod.agrees_with(LaurentPoly::constant(7, 1)));
    EXPECT_GE(prod.precision(), N + 1);
  }
}

TEST(Series, PrecisionIsPessimistic) {
  TruncSeries a(LaurentPoly::from_terms(3, {{0, 1}, {1, 1}}), 4);
  TruncSeries b(LaurentPoly::from_terms(3, {{0, 2}}), 6);
  EXPECT_EQ((a + b).precision(), 4);
  EXPECT_LE((a * b).precision(), 4);
  // Unknown coefficients never contradict.
  EXPECT_TRUE(a.agrees_with(LaurentPoly::from_terms(3, {{0, 1}, {1, 1}, {9, 2}})));
}

TEST(QPolyTest, Multinomial) {
  EXPECT_EQ(q_multinomial(2, {1}), QPoly::from_terms({{1, 1}, {0, 1}}));
  EXPECT_EQ(q_multinomial(4, {2}), QPoly::from_terms({{4, 1}, {3, 1}, {2, 2}, {1, 1}, {0, 1}}));
  EXPECT_TRUE(q_multinomial(3, {1, -1, 1}).is_zero());
  EXPECT_TRUE(q_multinomial(3, {2, 2}).is_zero());
}

TEST(QPolyTest, MultinomialMatchesFactorialQuotients) {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const IPoly denom = imul(imul(ifact(a), ifact(b)), ifact(n - a - b));
        EXPECT_EQ(q_multinomial(n, {a, b}), from_ipoly(idiv(ifact(n), denom))) << n << " " << a << " " << b;
      }
}

TEST(QPolyTest, Eval) {
  EXPECT_EQ(qpoly_eval(QPoly::from_terms({{1, 1}, {0, 1}}), 3), 4);
  EXPECT_EQ(qpoly_eval(QPoly::from_terms({{3, 1}, {2, -1}}), 3), 18);
  EXPECT_EQ(qpoly_eval(QPoly(), 7), 0);
  EXPECT_THROW(QPoly::monomial(70).eval(3), std::overflow_error);
}

TEST(QPolyTest, NegativeDegreeIsAnError) {
  EXPECT_THROW(QPoly::monomial(-1), DomainError);
  EXPECT_THROW(q_pow(-2), DomainError);
}

TEST(QPolyTest, SymmetryAndPascal) {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(q_multinomial(n, {k, n - k}), q_multinomial(n, {n - k, k}));
      if (n >= 1 && k >= 1)
        EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k) + q_pow(n - k) * q_binomial(n - 1, k - 1));
    }
}

TEST(QPolyTest, BinomialCountsSubspaces) {
  for (int m = 1; m <= 3; ++m) {
    const auto counts = subspace_counts(m, 3);
    long long total = 0, predicted = 0;
    for (int k = 0; k <= m; ++k) {
      EXPECT_EQ(q_binomial(m, k).eval(3), counts[k]) << m << " " << k;
      total += counts[k];
      predicted += q_binomial(m, k).eval(3);
    }
    EXPECT_EQ(total, predicted);
  }
}

TEST(QPolyTest, FallingAndIntegers) {
  EXPECT_EQ(q_int(0), QPoly());
  EXPECT_EQ(q_int(3), QPoly::from_terms({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(q_falling(4, 0), QPoly(1));
  EXPECT_EQ(q_falling(4, 2), q_int(4) * q_int(3));
  EXPECT_EQ(q_factorial(3), q_int(3) * q_int(2));
  EXPECT_THROW(q_int(-1), DomainError);
}

TEST(QPolyTest, RenderAndCoefficients) {
  const QPoly f = QPoly::from_terms({{2, 1}, {0, -1}});
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coeff(1), 0);
  EXPECT_FALSE(f.nonnegative_coefficients());
  EXPECT_EQ((f - f), QPoly());
  EXPECT_EQ(QPoly::q().pow(3), q_pow(3));
}
