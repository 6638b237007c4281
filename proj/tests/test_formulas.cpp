#include <gtest/gtest.h>

#include "symhecke/cosets.hpp"
#include "symhecke/engine.hpp"
#include "symhecke/formulas.hpp"

using namespace symhecke;

namespace symhecke {
void PrintTo(const QPoly& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace symhecke

namespace {

PaddedShape shape(const char* s) { return PaddedShape::parse(s); }

QPoly qm1() { return QPoly::q() - QPoly(1); }

// Direct count over coset representatives, the reference for every closed form below.
std::map<SymCoweight, std::int64_t> brute(std::uint32_t p, const char* mu, const SymCoweight& nu) {
  BruteOptions opts;
  opts.threads = 1;
  return h_bruteforce(p, parse_mu(mu), nu, opts).counts;
}

void expect_matches_brute(std::uint32_t p, const char* mu, const SymCoweight& nu,
                          const std::map<SymCoweight, QPoly>& formula) {
  const auto counts = brute(p, mu, nu);
  for (const auto& [lambda, n] : counts) {
    auto it = formula.find(lambda);
    EXPECT_EQ(it == formula.end() ? 0 : it->second.eval(p), n) << mu << " " << lambda.padded().to_string();
  }
  for (const auto& [lambda, v] : formula)
    if (!counts.count(lambda)) EXPECT_EQ(v.eval(p), 0) << mu << " " << lambda.padded().to_string();
}

SymCoweight uniform(int a, int n, int up, int down) {
  SymCoweight s;
  for (int r = 0; r < up; ++r) s.big_parts.push_back(a + 1);
  for (int r = 0; r < n - up - down; ++r) s.big_parts.push_back(a);
  for (int r = 0; r < down; ++r) s.big_parts.push_back(a - 1);
  return s;
}

}  // namespace

TEST(Dual1, Examples) {
  EXPECT_EQ(h_dual1(2, 2), q_pow(2));
  EXPECT_EQ(h_dual1(2, -2), QPoly(1));
  EXPECT_EQ(h_dual1(2, 0), qm1());
  EXPECT_EQ(h_dual1(2, 2) + h_dual1(2, 0) + h_dual1(2, -2), q_pow(2) + QPoly::q());
  EXPECT_EQ(h_dual1(0, 0), QPoly(1));
  EXPECT_THROW(h_dual1(2, 1), DomainError);
  EXPECT_THROW(h_dual1(2, 4), DomainError);
}

TEST(Dual1, TotalsAreCosetCounts) {
  for (int ell = 1; ell <= 6; ++ell) {
    QPoly total;
    for (int j = -ell; j <= ell; j += 2) total = total + h_dual1(ell, j);
    EXPECT_EQ(total, coset_count(2, Partition({ell, 0})));
  }
}

TEST(Dual1, MatchesBruteForce) {
  for (int ell = 1; ell <= 3; ++ell) {
    std::map<SymCoweight, QPoly> f;
    for (int j = -ell; j <= ell; j += 2) f[SymCoweight{{5 + j}, 0, 0}] = h_dual1(ell, j);
    expect_matches_brute(3, ell == 1 ? "-1" : ell == 2 ? "-2" : "-3", SymCoweight{{5}, 0, 0}, f);
  }
}

TEST(DualN, SymmetryAndTotal) {
  EXPECT_EQ(p_dual(2, 2, 1, 1), q_pow(4) - q_pow(2));
  EXPECT_EQ(p_dual(2, 2, 0, 0), q_pow(3) - QPoly::q());
  EXPECT_TRUE(p_dual(2, 2, 1, 0).is_zero());
  EXPECT_TRUE(p_dual(2, 2, 2, 1).is_zero());
  for (int n = 2; n <= 4; ++n)
    for (int ell = 1; ell <= 4; ++ell) {
      QPoly total;
      for (int i = 0; i <= ell; ++i)
        for (int j = 0; i + j <= ell; ++j) total = total + p_dual(n, ell, i, j);
      EXPECT_EQ(total, coset_count(2 * n, Partition([&] {
                                          std::vector<int> v(2 * n, 0);
                                          v[0] = ell;
                                          return v;
                                        }())))
          << n << " " << ell;
    }
}

TEST(DualN, MatchesBruteForce) {
  const SymCoweight nu{{5, 5}, 0, 0};
  const auto counts = brute(3, "-2", nu);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      if ((2 - i - j) % 2) continue;
      const SymCoweight lambda{{5 + i, 5 - j}, 0, 0};
      auto it = counts.find(lambda);
      EXPECT_EQ(p_dual(2, 2, i, j).eval(3), it == counts.end() ? 0 : it->second) << i << " " << j;
    }
}

TEST(ComputeN, ExamplesAndNormalization) {
  EXPECT_EQ(h_computen(1, 0, 1, 0), QPoly::q());
  EXPECT_EQ(h_computen(2, 1, 0, 0), q_pow(2) + QPoly::q());
  EXPECT_EQ(h_computen(2, 0, 1, 1), q_pow(3) + q_pow(2));
  EXPECT_EQ(h_tilde(2, 0, 1, 1), QPoly::q() + QPoly(1));
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        for (int k = 0; i + j + k <= n; ++k)
          EXPECT_EQ(h_tilde(n, i, j, k), q_multinomial(n, {i, j, k}));
}

TEST(ComputeN, MatchesBruteForce) {
  for (int n = 1; n <= 2; ++n)
    for (int ell = 1; ell <= 2 * n; ++ell) {
      std::map<SymCoweight, QPoly> f;
      for (int i = 0; 2 * i <= ell; ++i)
        for (int j = 0; 2 * i + j <= ell; ++j) {
          const int k = ell - 2 * i - j;
          if (i + j + k <= n) f[uniform(3, n, j, k)] = f[uniform(3, n, j, k)] + h_computen(n, i, j, k);
        }
      const std::string mu = "-1^" + std::to_string(ell);
      expect_matches_brute(3, mu.c_str(), uniform(3, n, 0, 0), f);
    }
}

TEST(Compute1, MatchesBruteForce) {
  EXPECT_EQ(h_compute1(1, 1, 0, 1, 0), QPoly(1));
  EXPECT_EQ(h_compute1(2, 2, 1, 0, 0), (q_pow(2) - QPoly(1)) * (QPoly::q() + QPoly(1)));
  for (auto [n1, n2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
    for (int ell = 1; ell <= n1 + n2; ++ell) {
      std::map<SymCoweight, QPoly> f;
      for (int A = 0; A <= ell; ++A)
        for (int B = 0; A + B <= ell; ++B) {
          const int C = ell - A - B;
          const QPoly v = h_compute1(n1, n2, A, B, C);
          if (v.is_zero()) continue;
          SymCoweight s;
          s.big_parts.assign(A, 2);
          s.count_z = n2 - A - B + C;
          s.count_one = n1 - A - C + B;
          f[s] = f[s] + v;
        }
      const std::string mu = "-1^" + std::to_string(ell);
      expect_matches_brute(3, mu.c_str(), SymCoweight{{}, n2, n1}, f);
    }
}

TEST(MainTheorem, MatchesBruteForce) {
  for (const char* s : {"3,0", "3,1,0", "3,1,0,0", "4,2,0,0", "3,2,0,0"})
    for (int ell = 1; ell <= 2; ++ell) {
      const std::string mu = "-1^" + std::to_string(ell);
      expect_matches_brute(3, mu.c_str(), parse_shape(s), h_mainthm_all(ell, shape(s)));
    }
}

TEST(MainTheorem, NonnegativeValues) {
  for (const char* s : {"3,1,1,0,0", "4,2,0,0", "3,3,0,0", "5,2,0,0", "2,1,0", "1,1,0"})
    for (int ell = 0; ell <= shape(s).n(); ++ell)
      for (const auto& [lambda, v] : h_mainthm_all(ell, shape(s)))
        for (std::int64_t q : {3, 5, 7}) EXPECT_GT(v.eval(q), 0) << s;
  // Pairing one-dimensional blocks contributes a factor q^2 - 1.
  EXPECT_EQ(h_mainthm(1, shape("1,1,0"), shape("2,1,0")), q_pow(2) - QPoly(1));
  for (const char* s : {"4,2,0,0", "3,3,0,0", "5,2,0,0"})
    for (int ell = 0; ell <= shape(s).n(); ++ell)
      for (const auto& [lambda, v] : h_mainthm_all(ell, shape(s))) EXPECT_TRUE(v.nonnegative_coefficients()) << s;
}

TEST(Corollary, AgreesWithMainTheorem) {
  EXPECT_TRUE(corollary_applies(shape("4,2,0,0")));
  EXPECT_FALSE(corollary_applies(shape("3,2,0,0")));
  EXPECT_FALSE(corollary_applies(shape("3,1,0,0")));
  for (int ell = 1; ell <= 4; ++ell)
    for (const auto& [lambda, v] : h_mainthm_all(ell, shape("4,2,0,0")))
      EXPECT_EQ(h_corollary(ell, shape("4,2,0,0"), PaddedShape::from_coweight(lambda)), v);
  EXPECT_THROW(h_corollary(1, shape("3,2,0,0"), shape("4,2,0,0")), DomainError);
}

TEST(Young, Examples) {
  EXPECT_EQ(h_young(1, shape("3,0"), shape("4,0")), QPoly::q());
  EXPECT_EQ(h_young(1, shape("3,0"), shape("2,0")), QPoly(1));
  for (int ell = 1; ell <= 4; ++ell)
    for (const auto& [lambda, v] : h_young_all(ell, shape("4,2,0,0")))
      EXPECT_EQ(h_mainthm(ell, shape("4,2,0,0"), PaddedShape::from_coweight(lambda)), v);
}
