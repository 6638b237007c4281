#pragma once

#include <map>

#include "symhecke/combinatorics.hpp"
#include "symhecke/qpoly.hpp"

namespace symhecke {

/// h for l = 2i+j+k acting on n blocks z^a: i blocks stay (both rows boxed),
/// j go to a+1, k go to a-1.
QPoly h_computen(int n, int i, int j, int k);
/// The normalized value h_computen * q^{-jk-(j+i)(n-i-k)}, the q-multinomial.
QPoly h_tilde(int n, int i, int j, int k);

/// Action on one-dimensional blocks nu = {1^{n2}, 0^{n1}}: A pairs (z -> z^2),
/// B moves 1 -> 0 and C moves 0 -> 1.
QPoly h_compute1(int n1, int n2, int A, int B, int C);

/// Sum over classes of paired tuples of q^r times the h-bar and h-tilde factors.
QPoly h_mainthm(int ell, const PaddedShape& nu, const PaddedShape& lambda);
std::map<SymCoweight, QPoly> h_mainthm_all(int ell, const PaddedShape& nu);

/// Closed product-sum for nu without one-dimensional blocks whose distinct
/// parts differ by at least 2. Throws DomainError outside that domain.
QPoly h_corollary(int ell, const PaddedShape& nu, const PaddedShape& lambda);
bool corollary_applies(const PaddedShape& nu);

/// Sum of tableau weights over paired diagrams with reduced shape lambda.
QPoly h_young(int ell, const PaddedShape& nu, const PaddedShape& lambda);
std::map<SymCoweight, QPoly> h_young_all(int ell, const PaddedShape& nu);

/// Coefficient of lambda = {a+i, a^{n-2}, a-j} in the action of c_{-l} on
/// n blocks z^a (l < a-1). Zero when i+j > l or l-i-j is odd.
QPoly p_dual(int n, int ell, int i, int j);

/// Coefficient of z^{a+j} in the action of c_{-l} on a single block z^a.
QPoly h_dual1(int ell, int j);

}  // namespace symhecke
