#include "symhecke/matrix.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symhecke {

LMatrix::LMatrix(std::uint32_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, LaurentPoly(p)) {}

LMatrix LMatrix::identity(std::uint32_t p, int dim) {
  LMatrix I(p, dim);
  for (int i = 0; i < dim; ++i) I(i, i) = LaurentPoly::constant(p, 1);
  return I;
}

LMatrix LMatrix::diag_powers(std::uint32_t p, const std::vector<int>& exps) {
  LMatrix D(p, static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) D(i, i) = LaurentPoly::monomial(p, exps[i]);
  return D;
}

LMatrix LMatrix::direct_sum(const LMatrix& a, const LMatrix& b) {
  std::uint32_t p = a.p_ ? a.p_ : b.p_;
  LMatrix r(p, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
  return r;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  LMatrix r(a.p_ ? a.p_ : b.p_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

LMatrix operator+(const LMatrix& a, const LMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  LMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

LMatrix LMatrix::scaled_by(const LaurentPoly& f) const {
  LMatrix r = *this;
  for (auto& x : r.a_) x = x * f;
  return r;
}

LMatrix LMatrix::reflected() const {
  LMatrix r = *this;
  for (auto& x : r.a_) x = x.reflected();
  return r;
}

LMatrix LMatrix::transposed() const {
  LMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

LMatrix LMatrix::even_in_t() const {
  LMatrix r = *this;
  for (auto& x : r.a_) x = x.even_in_t();
  return r;
}

LMatrix LMatrix::odd_in_t() const {
  LMatrix r = *this;
  for (auto& x : r.a_) x = x.odd_in_t();
  return r;
}

LMatrix LMatrix::squared_variable() const {
  LMatrix r = *this;
  for (auto& x : r.a_) x = x.squared_variable();
  return r;
}

LMatrix LMatrix::vstack(const LMatrix& a, const LMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
  LMatrix r(a.p_ ? a.p_ : b.p_, a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
  return r;
}

int LMatrix::min_valuation() const {
  int v = kInfValuation;
  for (const auto& x : a_) v = std::min(v, x.valuation());
  return v;
}

int LMatrix::max_degree() const {
  int d = INT_MIN;
  for (const auto& x : a_)
    if (!x.is_zero()) d = std::max(d, x.degree());
  return d;
}

LaurentPoly LMatrix::det() const {
  if (!square()) throw std::invalid_argument("determinant of non-square matrix");
  const int m = rows_;
  if (m == 0) return LaurentPoly::constant(p_, 1);
  // d[C] = det of rows 0..|C|-1 against column set C.
  std::vector<LaurentPoly> d(std::size_t(1) << m, LaurentPoly(p_));
  d[0] = LaurentPoly::constant(p_, 1);
  for (unsigned C = 1; C < (1u << m); ++C) {
    const int k = std::popcount(C);
    const int row = k - 1;
    LaurentPoly s(p_);
    int pos = 0;
    for (int j = 0; j < m; ++j) {
      if (!(C & (1u << j))) continue;
      const auto& a = (*this)(row, j);
      const auto& sub = d[C & ~(1u << j)];
      if (!a.is_zero() && !sub.is_zero()) {
        // Sign from moving column j past the columns of C after it.
        int after = std::popcount(C >> (j + 1));
        LaurentPoly t = a * sub;
        if (after & 1) s -= t; else s += t;
      }
      ++pos;
    }
    d[C] = std::move(s);
  }
  return d[(1u << m) - 1];
}

LMatrix LMatrix::adjugate() const {
  if (!square()) throw std::invalid_argument("adjugate of non-square matrix");
  const int m = rows_;
  LMatrix r(p_, m);
  if (m == 1) {
    r(0, 0) = LaurentPoly::constant(p_, 1);
    return r;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      LMatrix sub(p_, m - 1);
      for (int a = 0, ra = 0; a < m; ++a) {
        if (a == i) continue;
        for (int b = 0, cb = 0; b < m; ++b) {
          if (b == j) continue;
          sub(ra, cb++) = (*this)(a, b);
        }
        ++ra;
      }
      LaurentPoly c = sub.det();
      r(j, i) = ((i + j) & 1) ? -c : c;
    }
  return r;
}

bool LMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

std::string LMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> minor_valuations(const LMatrix& M) {
  const int R = M.rows(), C = M.cols();
  if (R > 30 || C > 30) throw std::invalid_argument("minor_valuations: matrix too large");
  const int K = std::min(R, C);
  std::vector<int> out(K, kInfValuation);
  // Minors keyed by (row mask, column mask); built up by expanding along the
  // lowest row of the row set.
  using Key = std::uint64_t;
  auto key = [](unsigned rm, unsigned cm) { return (static_cast<Key>(rm) << 32) | cm; };
  std::unordered_map<Key, LaurentPoly> prev, cur;
  prev.emplace(key(0, 0), LaurentPoly::constant(M.prime(), 1));
  for (int k = 1; k <= K; ++k) {
    cur.clear();
    for (const auto& [pk, pv] : prev) {
      if (pv.is_zero()) continue;
      unsigned rm = static_cast<unsigned>(pk >> 32), cm = static_cast<unsigned>(pk & 0xffffffffu);
      // New row must be below all rows in rm so each row set is generated once.
      int start = rm ? 32 - std::countl_zero(rm) : 0;
      for (int r = start; r < R; ++r) {
        for (int c = 0; c < C; ++c) {
          if (cm & (1u << c)) continue;
          const auto& a = M(r, c);
          if (a.is_zero()) continue;
          // Row r is the last row; column c sits at position (#cols of cm below c).
          int pos = std::popcount(cm & ((1u << c) - 1));
          int sign = ((k - 1) + pos) & 1;
          LaurentPoly t = a * pv;
          auto& slot = cur.try_emplace(key(rm | (1u << r), cm | (1u << c)), LaurentPoly(M.prime())).first->second;
          if (sign) slot -= t; else slot += t;
        }
      }
    }
    for (const auto& [kk, v] : cur) out[k - 1] = std::min(out[k - 1], v.valuation());
    std::swap(prev, cur);
  }
  return out;
}

SMatrix::SMatrix(std::uint32_t p, int rows, int cols, int prec)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, TruncSeries(p, prec)) {}

SMatrix::SMatrix(const LMatrix& M, int prec) : SMatrix(M.prime(), M.rows(), M.cols(), prec) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = TruncSeries(M(i, j).is_zero() ? LaurentPoly(p_) : M(i, j), prec);
}

SMatrix SMatrix::identity(std::uint32_t p, int dim, int prec) {
  return SMatrix(LMatrix::identity(p, dim), prec);
}

SMatrix operator*(const SMatrix& a, const SMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  SMatrix r;
  r.p_ = a.p_;
  r.rows_ = a.rows_;
  r.cols_ = b.cols_;
  r.a_.reserve(static_cast<std::size_t>(r.rows_) * r.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      TruncSeries s = a(i, 0) * b(0, j);
      for (int k = 1; k < a.cols_; ++k) s = s + a(i, k) * b(k, j);
      r.a_.push_back(std::move(s));
    }
  return r;
}

SMatrix SMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int m = rows_;
  SMatrix A = *this;
  int pmax = INT_MIN;
  for (const auto& x : a_) pmax = std::max(pmax, x.precision());
  SMatrix I = identity(p_, m, pmax);
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    int best = INT_MAX;
    for (int r = col; r < m; ++r) {
      auto v = A(r, col).valuation();
      if (v && *v < best) {
        best = *v;
        piv = r;
      }
    }
    if (piv < 0) throw PrecisionError("matrix inverse: no pivot known to be nonzero");
    if (piv != col) {
      for (int j = 0; j < m; ++j) {
        std::swap(A(piv, j), A(col, j));
        std::swap(I(piv, j), I(col, j));
      }
    }
    TruncSeries inv = A(col, col).inverse();
    for (int j = 0; j < m; ++j) {
      A(col, j) = A(col, j) * inv;
      I(col, j) = I(col, j) * inv;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || A(r, col).known_zero()) continue;
      TruncSeries f = A(r, col);
      for (int j = 0; j < m; ++j) {
        A(r, j) = A(r, j) - f * A(col, j);
        I(r, j) = I(r, j) - f * I(col, j);
      }
    }
  }
  return I;
}

int SMatrix::min_precision() const {
  int n = INT_MAX;
  for (const auto& x : a_) n = std::min(n, x.precision());
  return n;
}

std::optional<int> SMatrix::min_valuation() const {
  std::optional<int> v;
  for (const auto& x : a_) {
    auto w = x.valuation();
    if (w && (!v || *w < *v)) v = w;
  }
  return v;
}

LMatrix SMatrix::known_part() const {
  LMatrix M(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) M(i, j) = (*this)(i, j).known_part();
  return M;
}

bool SMatrix::agrees_with(const LMatrix& M) const {
  if (M.rows() != rows_ || M.cols() != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).agrees_with(M(i, j))) return false;
  return true;
}

bool SMatrix::even_support() const {
  for (const auto& x : a_)
    for (auto [e, c] : x.known_part().terms())
      if (e & 1) return false;
  return true;
}

}  // namespace symhecke
