#include <algorithm>
#include <random>
#include <stdexcept>

#include "symhecke/coweight.hpp"

namespace symhecke {

namespace {

// Blocks of a canonical matrix, in column order.
struct Block {
  enum Kind { One, Z, Big } kind;
  int col;
  int exponent;  // for Big
};

std::vector<Block> blocks_of(const SymCoweight& s) {
  std::vector<Block> out;
  int c = 0;
  for (int k = 0; k < s.count_one; ++k) out.push_back({Block::One, c++, 0});
  for (int k = 0; k < s.count_z; ++k) out.push_back({Block::Z, c++, 1});
  auto big = s.big_parts;
  std::sort(big.begin(), big.end(), std::greater<>());
  for (int a : big) {
    out.push_back({Block::Big, c, a});
    c += 2;
  }
  return out;
}

// Places `src` into `dst` at (r0, c0).
void put(LMatrix& dst, int r0, int c0, const LMatrix& src) {
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

LMatrix shifted(const LMatrix& M, int k) {
  return M.scaled_by(LaurentPoly::monomial(M.prime(), k));
}

// Integrality conditions on the columns of h, written over t = z^2.
// A candidate column x (or column pair) is admissible iff D x has entries in
// k[[t]]; `residue_rows` lists the row ranges of D x whose constant terms give
// the reduction mod z of the corresponding columns of B h Lambda^{-1}.
struct Condition {
  LMatrix D;
  std::vector<int> residue_rows;  // starting row of each m-row residue block
};

Condition condition_for(const Block& b, const LMatrix& B0, const LMatrix& B1) {
  const int m = B0.rows();
  const std::uint32_t p = B0.prime();
  Condition c;
  switch (b.kind) {
    case Block::One:
      c.D = LMatrix::vstack(B0, B1);
      c.residue_rows = {0};
      break;
    case Block::Z:
      c.D = LMatrix::vstack(shifted(B0, -1), B1);
      c.residue_rows = {m};
      break;
    case Block::Big: {
      const int se = (b.exponent + 1) / 2, so = b.exponent / 2;
      LMatrix D(p, 4 * m, 2 * m);
      put(D, 0, 0, B0);
      put(D, m, 0, B1);
      put(D, 2 * m, 0, shifted(B1, 1 - se).scaled_by(LaurentPoly::constant(p, -1)));
      put(D, 2 * m, m, shifted(B0, -se));
      put(D, 3 * m, 0, shifted(B0, -so).scaled_by(LaurentPoly::constant(p, -1)));
      put(D, 3 * m, m, shifted(B1, -so));
      c.D = std::move(D);
      c.residue_rows = {0, (b.exponent % 2 == 0) ? 2 * m : 3 * m};
      break;
    }
  }
  return c;
}

// Basis (as columns) of {x : D x in k[[t]]^rows}, by unimodular row reduction.
SMatrix lattice_basis(const LMatrix& D, int prec) {
  SMatrix A(D, prec);
  const int k = A.rows(), n = A.cols();
  for (int c = 0; c < n; ++c) {
    int piv = -1, best = 0;
    for (int r = c; r < k; ++r) {
      auto v = A(r, c).valuation();
      if (v && (piv < 0 || *v < best)) {
        piv = r;
        best = *v;
      }
    }
    if (piv < 0) throw PrecisionError("lattice basis: column has no known nonzero entry");
    if (piv != c)
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
    TruncSeries inv = A(c, c).inverse();
    for (int r = c + 1; r < k; ++r) {
      if (A(r, c).known_zero()) continue;
      TruncSeries f = A(r, c) * inv;
      for (int j = c; j < n; ++j) A(r, j) = A(r, j) - f * A(c, j);
    }
  }
  SMatrix R(D.prime(), n, n, prec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = j < i ? TruncSeries(D.prime(), prec) : A(i, j);
  return R.inverse();
}

struct Candidate {
  SMatrix basis;                                   // columns span the admissible lattice
  std::vector<std::vector<std::uint32_t>> images;  // residue image of each basis column, length m * width
};

Candidate prepare(const Block& b, const LMatrix& B0, const LMatrix& B1, int prec) {
  Condition cond = condition_for(b, B0, B1);
  Candidate cand{lattice_basis(cond.D, prec), {}};
  const int m = B0.rows();
  const SMatrix Y = SMatrix(cond.D, prec) * cand.basis;
  for (int j = 0; j < Y.cols(); ++j) {
    std::vector<std::uint32_t> img;
    for (int r0 : cond.residue_rows)
      for (int i = 0; i < m; ++i) {
        const TruncSeries& y = Y(r0 + i, j);
        auto v = y.valuation();
        if (y.precision() <= 0 || (v && *v < 0)) throw PrecisionError("residue not determined at this precision");
        img.push_back(y.coeff(0));
      }
    // Sanity: every row of D x must be integral.
    for (int r = 0; r < Y.rows(); ++r) {
      auto v = Y(r, j).valuation();
      if (v && *v < 0) throw PrecisionError("lattice basis lost integrality");
    }
    cand.images.push_back(std::move(img));
  }
  return cand;
}

bool invertible_mod_p(std::vector<std::vector<std::uint32_t>> M, std::uint32_t p) {
  const int n = static_cast<int>(M.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (M[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(M[piv], M[c]);
    std::uint32_t inv = modp::inv(M[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (!M[r][c]) continue;
      std::uint32_t f = modp::mul(M[r][c], inv, p);
      for (int j = c; j < n; ++j) M[r][j] = modp::sub(M[r][j], modp::mul(f, M[c][j], p), p);
    }
  }
  return true;
}

LMatrix canonical_inverse(const SymCoweight& s, std::uint32_t p) {
  const int m = s.dim();
  LMatrix L(p, m);
  for (const Block& b : blocks_of(s)) {
    switch (b.kind) {
      case Block::One: L(b.col, b.col) = LaurentPoly::monomial(p, 0); break;
      case Block::Z: L(b.col, b.col) = LaurentPoly::monomial(p, -1); break;
      case Block::Big:
        L(b.col, b.col) = LaurentPoly::monomial(p, 0);
        L(b.col, b.col + 1) = LaurentPoly::monomial(p, 1 - b.exponent, -1);
        L(b.col + 1, b.col + 1) = LaurentPoly::monomial(p, -b.exponent);
        break;
    }
  }
  return L;
}

}  // namespace

bool verify_witness(const LMatrix& B, const ReductionWitness& w) {
  const int m = B.dim();
  if (w.g.rows() != m || w.h.rows() != m || w.Lambda.dim() != m) return false;
  if (!w.h.even_support()) return false;
  if (!read_block_form(w.Lambda)) return false;
  // g must be integral with unit determinant: check valuations and residue rank.
  std::vector<std::vector<std::uint32_t>> res(m, std::vector<std::uint32_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const TruncSeries& x = w.g(i, j);
      auto v = x.valuation();
      if (x.precision() <= 0 || (v && *v < 0)) return false;
      res[i][j] = x.coeff(0);
    }
  if (!invertible_mod_p(res, B.prime())) return false;
  const SMatrix P = w.g * SMatrix(B, w.precision) * w.h;
  if (!P.agrees_with(w.Lambda)) return false;
  // The comparison must cover every exponent present in Lambda.
  return P.min_precision() > std::max(1, w.Lambda.max_degree());
}

ReductionWitness block_reduce(const LMatrix& B, int N) {
  if (!B.square()) throw DomainError("block_reduce: square matrix required");
  const std::uint32_t p = B.prime();
  const int m = B.dim();
  const SymCoweight s = sigma_from_invariants(B);
  ReductionWitness w;
  w.Lambda = canonical_matrix(p, s);
  w.precision = N;
  if (B == w.Lambda) {
    w.g = SMatrix::identity(p, m, N);
    w.h = SMatrix::identity(p, m, N);
    return w;
  }

  const LMatrix B0 = B.even_in_t(), B1 = B.odd_in_t();
  const int tprec = N;
  const auto blocks = blocks_of(s);
  std::vector<Candidate> cands;
  cands.reserve(blocks.size());
  for (const Block& b : blocks) {
    // Blocks of the same kind and exponent share one lattice.
    bool reused = false;
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (blocks[k].kind == b.kind && blocks[k].exponent == b.exponent) {
        cands.push_back(cands[k]);
        reused = true;
        break;
      }
    if (!reused) cands.push_back(prepare(b, B0, B1, tprec));
  }

  // Random admissible choices until the residues of B h Lambda^{-1} are a basis.
  std::mt19937_64 rng(0x5851f42d4c957f2dULL ^ static_cast<std::uint64_t>(m));
  const int attempts = 4000;
  std::vector<std::vector<std::uint32_t>> coeffs(blocks.size());
  bool found = false;
  for (int a = 0; a < attempts && !found; ++a) {
    std::vector<std::vector<std::uint32_t>> cols(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& cand = cands[bi];
      auto& c = coeffs[bi];
      c.assign(cand.images.size(), 0);
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
      const int width = blocks[bi].kind == Block::Big ? 2 : 1;
      for (int wdx = 0; wdx < width; ++wdx)
        for (int i = 0; i < m; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t j = 0; j < c.size(); ++j) acc += static_cast<std::uint64_t>(c[j]) * cand.images[j][wdx * m + i];
          cols[blocks[bi].col + wdx][i] = static_cast<std::uint32_t>(acc % p);
        }
    }
    found = invertible_mod_p(cols, p);
  }
  if (!found) throw PrecisionError("block_reduce: no admissible column choice found");

  // Assemble h over t, then substitute t = z^2.
  SMatrix h(p, m, m, 2 * tprec);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& cand = cands[bi];
    const int n = cand.basis.rows();
    std::vector<TruncSeries> x(n, TruncSeries(p, tprec));
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < cand.basis.cols(); ++j)
        if (coeffs[bi][j]) x[r] = x[r] + cand.basis(r, j).scaled(coeffs[bi][j]);
    const int width = blocks[bi].kind == Block::Big ? 2 : 1;
    for (int wdx = 0; wdx < width; ++wdx)
      for (int i = 0; i < m; ++i) h(i, blocks[bi].col + wdx) = x[wdx * m + i].squared_variable();
  }

  const SMatrix G = SMatrix(B, 2 * tprec) * h * SMatrix(canonical_inverse(s, p), 2 * tprec);
  w.g = G.inverse();
  w.h = h;
  w.precision = 2 * tprec;
  if (!verify_witness(B, w)) throw PrecisionError("block_reduce: witness not verified at this precision");
  return w;
}

SymCoweight symmetric_coweight(const LMatrix& B, const SigmaOptions& opts) {
  int N = opts.precision > 0 ? opts.precision : policy_precision(B);
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, N *= 2) {
    try {
      ReductionWitness w1 = block_reduce(B, N);
      ReductionWitness w2 = block_reduce(B, 2 * N);
      if (!(w1.Lambda == w2.Lambda)) throw std::logic_error("block_reduce is unstable under precision doubling");
      auto s = read_block_form(w1.Lambda);
      const HatInvariants h = hat_invariants(B);
      int sum = 0;
      for (int a : s->big_parts) sum += a;
      if (s->big_parts != h.big_parts || ((s->count_z + sum) % 2) != h.parity)
        throw std::logic_error("reduction disagrees with hat invariants");
      return *s;
    } catch (const PrecisionError&) {
      if (attempt == opts.max_retries) throw;
    }
  }
  throw PrecisionError("symmetric_coweight: retry cap reached");
}

}  // namespace symhecke
