#include <algorithm>
#include <limits>
#include <sstream>

#include "symhecke/combinatorics.hpp"
#include "symhecke/field.hpp"

namespace symhecke {

void require_young_shape(const PaddedShape& nu) {
  const int n = nu.n();
  if (n % 2 != 0 || nu.multiplicity(0) != n / 2 || nu.multiplicity(1) != 0)
    throw DomainError("tableau shapes need n/2 zeros and no part equal to 1, got " + nu.to_string());
}

int PairedDiagram::added() const {
  int s = 0;
  for (int b : boxes) s += b;
  return s;
}

std::vector<int> PairedDiagram::reduced() const {
  const int n = this->n();
  std::vector<int> r;
  for (int i = 0; i < n / 2; ++i) r.push_back(nu[i] + boxes[i] - nu[n - 1 - i] - boxes[n - 1 - i]);
  return r;
}

SymCoweight PairedDiagram::reduced_shape() const {
  SymCoweight s;
  for (int r : reduced()) {
    if (r >= 2) {
      s.big_parts.push_back(r);
    } else if (r == 1) {
      ++s.count_z;
      ++s.count_one;
    } else {
      s.count_one += 2;
    }
  }
  std::sort(s.big_parts.begin(), s.big_parts.end(), std::greater<>());
  return s;
}

std::string PairedDiagram::to_string() const {
  std::ostringstream os;
  os << nu.to_string() << " +";
  for (int b : boxes) os << b;
  return os.str();
}

std::string PairedTableau::to_string() const {
  std::ostringstream os;
  os << diagram.nu.to_string() << " fill";
  for (int f : fill) os << ' ' << f;
  return os.str();
}

std::vector<PairedDiagram> enum_paired_diagrams(int ell, const PaddedShape& nu) {
  require_young_shape(nu);
  const int n = nu.n();
  std::vector<PairedDiagram> out;
  if (ell < 0 || ell > n) return out;
  std::vector<int> b(n, 0);
  std::fill(b.end() - ell, b.end(), 1);
  do {
    out.push_back(PairedDiagram{nu, b});
  } while (std::next_permutation(b.begin(), b.end()));
  std::reverse(out.begin(), out.end());  // boxes on upper rows first
  return out;
}

std::vector<PairedDiagram> enum_paired_diagrams(int ell, const PaddedShape& nu, const PaddedShape& lambda) {
  if (nu.n() != lambda.n()) throw DomainError("nu and lambda must have the same length");
  const SymCoweight target = lambda.coweight();
  std::vector<PairedDiagram> out;
  for (auto& d : enum_paired_diagrams(ell, nu))
    if (d.reduced_shape() == target) out.push_back(std::move(d));
  return out;
}

namespace {

// Rows are 1-based below, matching the filling rules.
bool may_fill(const PairedTableau& t, int number, int row) {
  const int n = t.diagram.n();
  const auto& nu = t.diagram.nu;
  if (number % 2 == 1) return row == (number - 1) / 2 + 1;
  const int k = number / 2;
  if (row < k + 1 || row > n - k + 1) return false;
  // Exception clause: row j with nu_j = 0 whose partner carries the same part
  // as row k and holds a larger number.
  const int partner = n - row + 1;
  if (nu[row - 1] == 0 && nu[k - 1] == nu[partner - 1] && t.fill[partner - 1] > number) return false;
  return true;
}

void fill_rows(PairedTableau& t, std::vector<int>& rows, std::size_t idx, std::vector<bool>& used,
               std::vector<PairedTableau>& out) {
  if (idx == rows.size()) {
    if (tableau_legal(t)) out.push_back(t);
    return;
  }
  const int n = t.diagram.n();
  const int row = rows[idx];
  for (int x = 1; x <= n; ++x) {
    if (used[x]) continue;
    const bool ok = x % 2 == 1 ? row == (x - 1) / 2 + 1 : (row >= x / 2 + 1 && row <= n - x / 2 + 1);
    if (!ok) continue;
    used[x] = true;
    t.fill[row - 1] = x;
    fill_rows(t, rows, idx + 1, used, out);
    t.fill[row - 1] = 0;
    used[x] = false;
  }
}

struct Label {
  long long a, b;
  bool operator<(const Label& o) const { return a != o.a ? a < o.a : b < o.b; }
};

constexpr long long kInf = std::numeric_limits<long long>::max();

class Stage {
 public:
  Stage(const PairedTableau& t, int i) : t_(t), n_(t.diagram.n()), i_(i) {
    lo_ = n_ / 2 - i + 1;
    hi_ = n_ / 2 + i;
  }
  bool in_range(int row) const { return row >= lo_ && row <= hi_; }
  bool present(int row) const {
    const int f = t_.fill[row - 1];
    return in_range(row) && f != 0 && f >= n_ - 2 * i_ + 1;
  }
  Label label(int row) const {
    const auto& nu = t_.diagram.nu;
    if (row <= n_ / 2) {
      const int partner = n_ - row + 1;
      return {nu[row - 1] + present(row) - present(partner), n_ - row};
    }
    const int upper = n_ - row + 1;
    return {-(nu[upper - 1] + present(upper) - present(row)), n_ - row};
  }
  /// Rows of the stage without a present box and with label < bound.
  int count_below(Label bound) const {
    int c = 0;
    for (int r = lo_; r <= hi_; ++r)
      if (!present(r) && (bound.a == kInf || label(r) < bound)) ++c;
    return c;
  }
  std::vector<SubtableauRow> rows() const {
    std::vector<SubtableauRow> v;
    for (int r = lo_; r <= hi_; ++r) {
      Label l = label(r);
      v.push_back({r, static_cast<int>(l.a), static_cast<int>(l.b), present(r)});
    }
    return v;
  }

 private:
  const PairedTableau& t_;
  int n_, i_, lo_, hi_;
};

}  // namespace

bool tableau_legal(const PairedTableau& t) {
  const int n = t.diagram.n();
  if (static_cast<int>(t.fill.size()) != n) return false;
  std::vector<bool> used(n + 1, false);
  for (int r = 1; r <= n; ++r) {
    const int x = t.fill[r - 1];
    if ((x != 0) != (t.diagram.boxes[r - 1] != 0)) return false;
    if (x == 0) continue;
    if (x < 1 || x > n || used[x]) return false;
    used[x] = true;
    if (!may_fill(t, x, r)) return false;
  }
  return true;
}

std::vector<PairedTableau> enum_tableaux(const PairedDiagram& d) {
  require_young_shape(d.nu);
  PairedTableau t{d, std::vector<int>(d.n(), 0)};
  std::vector<int> rows;
  for (int r = 1; r <= d.n(); ++r)
    if (d.boxes[r - 1]) rows.push_back(r);
  std::vector<bool> used(d.n() + 1, false);
  std::vector<PairedTableau> out;
  fill_rows(t, rows, 0, used, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubtableauRow> subtableau(const PairedTableau& t, int i) {
  if (i < 1 || i > t.diagram.n() / 2) throw DomainError("subtableau index out of range");
  return Stage(t, i).rows();
}

std::vector<QPoly> tableau_weights(const PairedTableau& t) {
  const int n = t.diagram.n();
  const int half = n / 2;
  std::vector<QPoly> wt(n + 1, QPoly(1));
  wt[0] = QPoly(0);
  for (int row = 1; row <= n; ++row) {
    const int x = t.fill[row - 1];
    if (x == 0) continue;
    if (x % 2 == 1) {
      const int k = (x - 1) / 2;
      Stage s(t, half - k);
      wt[x] = q_pow(s.count_below({kInf, 0}));
      continue;
    }
    const int k = x / 2;
    Stage s(t, half - k + 1);
    const Label lab = s.label(row);
    if (row != n - k + 1) {
      const int e = s.count_below({lab.a - 1, lab.b}) - 1;
      if (e < 0) throw std::logic_error("negative weight exponent in tableau " + t.to_string());
      wt[x] = q_pow(e) * QPoly::from_terms({{1, 1}, {0, -1}});
    } else if (t.fill[k - 1] != 2 * k - 1) {
      wt[x] = q_pow(s.count_below({lab.a - 1, lab.b}));
    } else {
      wt[x] = q_pow(s.count_below(lab));
    }
  }
  wt.erase(wt.begin());
  return wt;
}

QPoly tableau_weight(const PairedTableau& t) {
  QPoly w(1);
  for (const auto& x : tableau_weights(t)) w *= x;
  return w;
}

}  // namespace symhecke
