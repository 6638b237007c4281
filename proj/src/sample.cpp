#include <random>

#include "symhecke/coweight.hpp"

namespace symhecke {

namespace {

std::uint32_t nonzero(std::mt19937_64& rng, std::uint32_t p) { return 1 + static_cast<std::uint32_t>(rng() % (p - 1)); }

LMatrix left_step(std::mt19937_64& rng, std::uint32_t p, int m, int degree) {
  LMatrix E = LMatrix::identity(p, m);
  const int kind = static_cast<int>(rng() % 4);
  if (m == 1 || kind == 3) {
    // Unit diagonal entry: nonzero constant plus a multiple of z.
    int i = static_cast<int>(rng() % m);
    E(i, i) = LaurentPoly::constant(p, nonzero(rng, p));
    if (degree >= 1 && rng() % 2) E(i, i) += LaurentPoly::monomial(p, 1, static_cast<std::int64_t>(rng() % p));
    return E;
  }
  int i = static_cast<int>(rng() % m), j = static_cast<int>(rng() % (m - 1));
  if (j >= i) ++j;
  if (kind == 2) {
    E(i, i) = E(j, j) = LaurentPoly(p);
    E(i, j) = E(j, i) = LaurentPoly::constant(p, 1);
    return E;
  }
  LaurentPoly f(p);
  for (int e = 0; e <= degree; ++e)
    if (rng() % 2) f += LaurentPoly::monomial(p, e, static_cast<std::int64_t>(rng() % p));
  E(i, j) = f;
  return E;
}

LMatrix right_step(std::mt19937_64& rng, std::uint32_t p, int m, int even_degree) {
  LMatrix E = LMatrix::identity(p, m);
  const int kind = static_cast<int>(rng() % 3);
  const int span = 2 * even_degree + 1;
  if (m == 1 || kind == 2) {
    int i = static_cast<int>(rng() % m);
    int e = static_cast<int>(rng() % span) - even_degree;
    E(i, i) = LaurentPoly::monomial(p, 2 * e, nonzero(rng, p));
    return E;
  }
  int i = static_cast<int>(rng() % m), j = static_cast<int>(rng() % (m - 1));
  if (j >= i) ++j;
  LaurentPoly f(p);
  for (int e = -even_degree; e <= even_degree; ++e)
    if (rng() % 3 == 0) f += LaurentPoly::monomial(p, 2 * e, static_cast<std::int64_t>(rng() % p));
  E(i, j) = f;
  return E;
}

}  // namespace

LMatrix sample_equivalent(const LMatrix& Lambda, std::uint64_t seed, const SampleBounds& b) {
  const std::uint32_t p = Lambda.prime();
  const int m = Lambda.dim();
  std::mt19937_64 rng(seed);
  LMatrix k = LMatrix::identity(p, m), h = LMatrix::identity(p, m);
  for (int s = 0; s < b.steps; ++s) k = left_step(rng, p, m, b.degree) * k;
  for (int s = 0; s < b.steps; ++s) h = h * right_step(rng, p, m, b.even_degree);
  return k * Lambda * h;
}

LMatrix random_unimodular(std::uint32_t p, int m, std::uint64_t seed, int degree, int steps) {
  std::mt19937_64 rng(seed);
  LMatrix k = LMatrix::identity(p, m);
  for (int s = 0; s < steps; ++s) k = left_step(rng, p, m, degree) * k;
  return k;
}

}  // namespace symhecke
