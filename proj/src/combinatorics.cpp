#include "symhecke/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "symhecke/field.hpp"

namespace symhecke {

PaddedShape::PaddedShape(const Partition& parts) : parts_(parts) {
  for (int x : parts_.parts())
    if (x < 0) throw DomainError("padded shape has a negative part");
  if (parts_.multiplicity(0) < big_count())
    throw DomainError("padded shape " + parts_.to_string() + " has fewer zeros than parts >= 2");
}

int PaddedShape::big_count() const {
  return static_cast<int>(std::count_if(parts().begin(), parts().end(), [](int x) { return x >= 2; }));
}

std::vector<int> PaddedShape::big_values() const {
  std::vector<int> v;
  for (int x : parts())
    if (x >= 2) v.push_back(x);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const OmegaEntry* OmegaStats::find(int value) const {
  for (const auto& e : big)
    if (e.value == value) return &e;
  return nullptr;
}

std::string OmegaStats::to_string() const {
  std::ostringstream os;
  for (const auto& e : big)
    os << "[" << e.value << "]=(" << e.w00 << "," << e.w11 << "," << e.minus << "," << e.plus << ") ";
  os << "[1]=(" << one.pairs << "," << one.one_to_zero << "," << one.zero_to_one << ",0)";
  return os.str();
}

int PairedTuple::size() const {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

namespace {

struct TupleSearch {
  const PaddedShape& nu;
  int n, nbig;
  std::vector<int> w;
  std::vector<int> partner;  // -1 if unpaired
  std::function<void(const PairedTuple&)>* emit = nullptr;

  bool free_zero(int j) const { return nu[j] == 0 && j < n - nbig; }

  PairedTuple build() const {
    PairedTuple t;
    t.w = w;
    t.hat.assign(n, 0);
    for (int i = 0; i < nbig; ++i) t.pairs.emplace_back(i, n - 1 - i);
    for (int i = 0; i < n; ++i)
      if (nu[i] == 1 && partner[i] >= 0) t.pairs.emplace_back(i, partner[i]);
    for (int i = 0; i < n; ++i) {
      if (nu[i] > 1) {
        t.hat[i] = nu[i] + w[i] - w[n - 1 - i];
      } else if (nu[i] == 1 && partner[i] >= 0) {
        t.hat[i] = 2;
      } else if (partner[i] < 0 && !(nu[i] == 0 && i >= n - nbig)) {
        t.hat[i] = nu[i] == 1 ? 1 - w[i] : w[i];
      } else {
        t.hat[i] = 0;
      }
    }
    return t;
  }

  // Assigns optional partners to boxed rows with part 1, in row order.
  void pair_from(int r) {
    while (r < n && !(nu[r] == 1 && w[r] == 1)) ++r;
    if (r == n) {
      (*emit)(build());
      return;
    }
    pair_from(r + 1);
    for (int j = 0; j < n; ++j) {
      if (!free_zero(j) || w[j] != 0 || partner[j] >= 0) continue;
      partner[r] = j;
      partner[j] = r;
      pair_from(r + 1);
      partner[r] = partner[j] = -1;
    }
  }
};

void for_each_tuple(int ell, const PaddedShape& nu, std::function<void(const PairedTuple&)> f) {
  const int n = nu.n();
  if (ell < 0 || ell > n) return;
  TupleSearch s{nu, n, nu.big_count(), std::vector<int>(n, 0), std::vector<int>(n, -1), &f};
  // Subsets of size ell in lexicographic order of the 0/1 vector.
  std::vector<int> w(n, 0);
  std::fill(w.end() - ell, w.end(), 1);
  do {
    s.w = w;
    s.pair_from(0);
  } while (std::next_permutation(w.begin(), w.end()));
}

SymCoweight hat_shape(const PairedTuple& t) { return SymCoweight::from_padded(Partition::sorted(t.hat)); }

}  // namespace

OmegaStats omega_of(const PairedTuple& t, const PaddedShape& nu) {
  OmegaStats om;
  const int n = nu.n();
  for (int v : nu.big_values()) om.big.push_back(OmegaEntry{v, 0, 0, 0, 0});
  std::vector<int> partner(n, -1);
  for (auto [a, b] : t.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  for (int i = 0; i < n; ++i) {
    if (nu[i] > 1) {
      auto it = std::find_if(om.big.begin(), om.big.end(), [&](const OmegaEntry& e) { return e.value == nu[i]; });
      const int wp = t.w[i], wz = t.w[n - 1 - i];
      if (wp == 0 && wz == 0) ++it->w00;
      else if (wp == 1 && wz == 1) ++it->w11;
      else if (wp == 1) ++it->plus;
      else ++it->minus;
    } else if (nu[i] == 1) {
      if (partner[i] >= 0) ++om.one.pairs;
      else if (t.w[i] == 1) ++om.one.one_to_zero;
    } else if (partner[i] < 0 && i < n - nu.big_count() && t.w[i] == 1) {
      ++om.one.zero_to_one;
    }
  }
  return om;
}

std::map<SymCoweight, std::vector<TupleClass>> paired_tuple_classes(int ell, const PaddedShape& nu) {
  std::map<SymCoweight, std::map<OmegaStats, TupleClass>> acc;
  for_each_tuple(ell, nu, [&](const PairedTuple& t) {
    auto& bucket = acc[hat_shape(t)];
    OmegaStats om = omega_of(t, nu);
    auto [it, fresh] = bucket.try_emplace(om);
    if (fresh) {
      it->second.omega = om;
      it->second.representative = t;
    }
    ++it->second.members;
  });
  std::map<SymCoweight, std::vector<TupleClass>> out;
  for (auto& [lam, classes] : acc)
    for (auto& [om, c] : classes) out[lam].push_back(std::move(c));
  return out;
}

std::vector<TupleClass> enum_paired_tuples(int ell, const PaddedShape& nu, const PaddedShape& lambda) {
  if (nu.n() != lambda.n()) throw DomainError("nu and lambda must have the same length");
  auto all = paired_tuple_classes(ell, nu);
  auto it = all.find(lambda.coweight());
  if (it == all.end()) return {};
  return it->second;
}

int tuple_exponent(const OmegaStats& om, const PaddedShape& nu) {
  long long sum_plus_or_both = 0, sum_diff = 0, sum_sq = 0;
  long long nn = 0, nshift = 0, nplus = 0;
  for (std::size_t a = 0; a < om.big.size(); ++a) {
    const auto& e = om.big[a];
    const long long ni = nu.multiplicity(e.value);
    sum_plus_or_both += e.plus + e.w11;
    sum_diff += e.w00 - e.w11;
    sum_sq += static_cast<long long>(e.w00) * e.w00 + static_cast<long long>(e.w11) * e.w11;
    nplus += ni * e.plus;
    for (std::size_t b = a + 1; b < om.big.size(); ++b) {
      const auto& f = om.big[b];
      nn += ni * nu.multiplicity(f.value);
      nshift += ni * (f.plus - f.minus);
    }
  }
  const long long twice_last = sum_diff * sum_diff - sum_sq;
  if (twice_last % 2 != 0) throw std::logic_error("tuple exponent is not an integer");
  const long long r = sum_plus_or_both * nu.t1() + sum_diff * om.one.total() + nn + nshift + nplus - twice_last / 2;
  return static_cast<int>(r);
}

}  // namespace symhecke
