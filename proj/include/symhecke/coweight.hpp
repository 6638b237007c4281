#pragma once

#include <cstdint>
#include <vector>

#include "symhecke/matrix.hpp"
#include "symhecke/partition.hpp"

namespace symhecke {

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// rho(M): the Cartan exponents, read off from minimum valuations of minors.
Partition dominant_coweight(const LMatrix& M);

struct HatInvariants {
  std::vector<int> big_parts;  // weakly decreasing
  int parity = 0;              // v(det B) mod 2
  bool operator==(const HatInvariants&) const = default;
};

/// Invariants of B(z) B(-z)^{-1}: the two-dimensional block exponents of
/// sigma(B) and the determinant valuation parity.
HatInvariants hat_invariants(const LMatrix& B);

/// vol(P0) - vol(P1), where P0 and P1 are the O_F-lattices spanned by the even
/// and odd components of the rows of B and zB (F = k((z^2))). Equals the number
/// of z blocks plus the number of two-dimensional blocks.
int projection_defect(const LMatrix& B);

/// sigma(B) from hat_invariants and projection_defect. Throws std::logic_error
/// if the two disagree.
SymCoweight sigma_from_invariants(const LMatrix& B);

/// Canonical block-diagonal representative: 1 blocks, then z blocks, then the
/// two-dimensional blocks [[1,z],[0,z^i]] in decreasing i.
LMatrix canonical_matrix(std::uint32_t p, const SymCoweight& s);

/// Reads sigma off a block-diagonal matrix with blocks 1, z, [[1,z],[0,z^i]]
/// (any order); nullopt if the matrix is not of that form.
std::optional<SymCoweight> read_block_form(const LMatrix& L);

struct ReductionWitness {
  SMatrix g;      // over k[[z]], invertible
  SMatrix h;      // even exponents only
  LMatrix Lambda; // canonical block form
  int precision = 0;
};

/// 2 m (max entry degree - min entry valuation) + 8.
int policy_precision(const LMatrix& B);

/// Finds g in GL_m(k[[z]]) and h in GL_m(k((z^2))), truncated, with g B h = Lambda
/// on every known coefficient. Throws PrecisionError when N is too small.
ReductionWitness block_reduce(const LMatrix& B, int N);

/// Checks g B h against Lambda, the parity of h, and invertibility of g over k[[z]].
bool verify_witness(const LMatrix& B, const ReductionWitness& w);

struct SigmaOptions {
  int precision = 0;  // 0 selects policy_precision
  int max_retries = 4;
};

/// sigma(B) certified by block_reduce at N and 2N.
SymCoweight symmetric_coweight(const LMatrix& B, const SigmaOptions& opts = {});

struct SampleBounds {
  int degree = 3;       // max degree of polynomial entries in the left factor
  int even_degree = 2;  // max |exponent| / 2 in right-factor entries
  int steps = 6;        // elementary operations per side
};

/// k * Lambda * h with k a random product of elementary, permutation and unit
/// diagonal matrices over F_p[z], and h a random product of even-exponent
/// elementary matrices and even-valuation diagonal matrices.
LMatrix sample_equivalent(const LMatrix& Lambda, std::uint64_t seed, const SampleBounds& b = {});

/// Random element of GL_m(F_p[z]) with unit determinant, built from `steps`
/// elementary, permutation and unit diagonal factors of degree <= `degree`.
LMatrix random_unimodular(std::uint32_t p, int m, std::uint64_t seed, int degree = 2, int steps = 4);

/// Strip relation for rho(A) = {1^l, 0^{m-l}}: |sigma(B)_i - sigma(AB)_i| <= 1.
bool pieri_check(const LMatrix& A, const LMatrix& B);
/// Interlacing for rho(A) = {l, 0^{m-1}}: a_{i+1} <= b_i <= a_{i-1}.
bool dual_pieri_check(const LMatrix& A, const LMatrix& B);

bool vertical_strip(const Partition& a, const Partition& b);
bool interlaces(const Partition& a, const Partition& b);

}  // namespace symhecke
