// Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "symhecke/cosets.hpp"
#include "symhecke/coweight.hpp"
#include "symhecke/engine.hpp"
#include "symhecke/formulas.hpp"
#include "symhecke/io.hpp"

using namespace symhecke;

namespace {

constexpr std::uint32_t kP = 3;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few problems of a criterion.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 5) problems_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << problems_.str();
    return {failures_ == 0, s.str()};
  }

 private:
  int checks_ = 0, failures_ = 0;
  std::ostringstream problems_;
};

BruteOptions brute_opts() {
  BruteOptions o;
  o.threads = 0;
  return o;
}

std::map<SymCoweight, std::int64_t> brute(const std::string& mu, const SymCoweight& nu) {
  return h_bruteforce(kP, parse_mu(mu), nu, brute_opts()).counts;
}

std::string vertical(int ell) { return "-1^" + std::to_string(ell); }

std::string lam(const SymCoweight& s) { return s.padded().to_string(); }

// Compares brute-force counts with a formula map evaluated at q = p.
void compare(Check& c, const std::string& tag, const std::map<SymCoweight, std::int64_t>& counts,
             const std::map<SymCoweight, QPoly>& formula) {
  std::set<SymCoweight> keys;
  for (const auto& [l, n] : counts) keys.insert(l);
  for (const auto& [l, v] : formula) keys.insert(l);
  for (const auto& l : keys) {
    auto b = counts.find(l);
    auto f = formula.find(l);
    const std::int64_t nb = b == counts.end() ? 0 : b->second;
    const std::int64_t nf = f == formula.end() ? 0 : f->second.eval(kP);
    c.expect(nb == nf, tag + " " + lam(l) + ": brute " + std::to_string(nb) + " formula " + std::to_string(nf));
  }
}

SymCoweight uniform(int a, int n, int up, int down) {
  SymCoweight s;
  for (int r = 0; r < up; ++r) s.big_parts.push_back(a + 1);
  for (int r = 0; r < n - up - down; ++r) s.big_parts.push_back(a);
  for (int r = 0; r < down; ++r) s.big_parts.push_back(a - 1);
  return s;
}

SymCoweight random_shape(std::mt19937_64& rng, int m) {
  SymCoweight s;
  const int nbig = static_cast<int>(rng() % (m / 2 + 1));
  for (int i = 0; i < nbig; ++i) s.big_parts.push_back(2 + static_cast<int>(rng() % 4));
  std::sort(s.big_parts.rbegin(), s.big_parts.rend());
  s.count_z = static_cast<int>(rng() % (m - 2 * nbig + 1));
  s.count_one = m - 2 * nbig - s.count_z;
  return s;
}

Outcome normal_form_round_trip() {
  Check c;
  std::mt19937_64 rng(20240601);
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const SymCoweight s = random_shape(rng, m);
    const LMatrix B = sample_equivalent(canonical_matrix(kP, s), rng(), SampleBounds{3, 2, 6});
    c.expect(symmetric_coweight(B) == s, "trial " + std::to_string(t) + " expected " + lam(s));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  return c.done("200 samples");
}

Outcome coset_counts() {
  Check c;
  for (int m = 1; m <= 4; ++m)
    for (int ell = 0; ell <= m; ++ell) {
      const std::int64_t n = static_cast<std::int64_t>(enum_vertical_reps(m, ell, kP).count());
      c.expect(n == q_binomial(m, ell).eval(kP), "vertical(" + std::to_string(m) + "," + std::to_string(ell) + ")");
    }
  for (int m : {2, 4})
    for (int ell = 1; ell <= 3; ++ell) {
      const std::int64_t n = static_cast<std::int64_t>(enum_row_reps(m, ell, kP).count());
      const std::int64_t expected = (q_pow((m - 1) * (ell - 1)) * q_int(m)).eval(kP);
      c.expect(n == expected, "row(" + std::to_string(m) + "," + std::to_string(ell) + ")");
    }
  return c.done("vertical m<=4, row m in {2,4}");
}

Outcome compute_n() {
  Check c;
  const int n = 2;
  std::map<int, std::map<std::pair<int, int>, std::int64_t>> by_a;
  for (int a : {3, 4})
    for (int ell = 1; ell <= 3; ++ell) {
      std::map<SymCoweight, QPoly> f;
      for (int i = 0; 2 * i <= ell; ++i)
        for (int j = 0; 2 * i + j <= ell; ++j) {
          const int k = ell - 2 * i - j;
          if (i + j + k > n) continue;
          f[uniform(a, n, j, k)] += q_pow(n * (i + j) - i * (i + j + k)) * q_multinomial(n, {i, j, k});
        }
      const auto counts = brute(vertical(ell), uniform(a, n, 0, 0));
      compare(c, "a=" + std::to_string(a) + " l=" + std::to_string(ell), counts, f);
      for (int j = 0; j <= ell; ++j)
        for (int k = 0; j + k <= ell; ++k) {
          auto it = counts.find(uniform(a, n, j, k));
          if (it != counts.end()) by_a[ell * 100 + a][{j, k}] = it->second;
        }
    }
  for (int ell = 1; ell <= 3; ++ell)
    c.expect(by_a[ell * 100 + 3] == by_a[ell * 100 + 4], "a-independence at l=" + std::to_string(ell));
  return c.done("nu = {a,a,0,0}, a in {3,4}, l <= 3");
}

Outcome compute_1() {
  Check c;
  for (auto [n1, n2] : {std::pair{1, 1}, std::pair{2, 2}})
    for (int ell = 1; ell <= std::min(3, n1 + n2); ++ell) {
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
          f[s] += v;
        }
      compare(c, "(" + std::to_string(n1) + "," + std::to_string(n2) + ") l=" + std::to_string(ell),
              brute(vertical(ell), SymCoweight{{}, n2, n1}), f);
    }
  return c.done("(n1,n2) in {(1,1),(2,2)}, l <= 3");
}

Outcome main_theorem() {
  Check c;
  int gap1_mismatches = 0;
  for (const char* s : {"3,1,0,0", "3,1,0", "3,1,1,0,0", "4,2,0,0", "3,2,0,0"}) {
    const PaddedShape nu = PaddedShape::parse(s);
    const bool gap1 = std::string(s) == "3,2,0,0";
    for (int ell = 1; ell <= std::min(3, nu.n()); ++ell) {
      const auto formula = h_mainthm_all(ell, nu);
      Check local;
      compare(local, std::string(s) + " l=" + std::to_string(ell), brute(vertical(ell), nu.coweight()), formula);
      const Outcome o = local.done("");
      if (gap1) {
        gap1_mismatches += !o.ok;
        if (!o.ok) std::printf("  finding: gap-1 mismatch on %s l=%d%s\n", s, ell, o.detail.c_str());
      } else {
        c.expect(o.ok, o.detail);
      }
      if (corollary_applies(nu))
        for (const auto& [l, v] : formula)
          c.expect(h_corollary(ell, nu, PaddedShape::from_coweight(l)) == v,
                   std::string("corollary ") + s + " -> " + lam(l));
    }
  }
  return c.done("gap-1 findings: " + std::to_string(gap1_mismatches));
}

Outcome young() {
  Check c;
  for (const char* s : {"3,0", "4,2,0,0", "7,2,0,0"}) {
    const PaddedShape nu = PaddedShape::parse(s);
    for (int ell = 1; ell <= std::min(3, nu.n()); ++ell)
      compare(c, std::string(s) + " l=" + std::to_string(ell), brute(vertical(ell), nu.coweight()), h_young_all(ell, nu));
  }
  for (int a : {3, 4})
    for (int n = 1; n <= 2; ++n)
      for (int ell = 0; ell <= 2 * n; ++ell) {
        std::map<SymCoweight, QPoly> cn;
        for (int i = 0; 2 * i <= ell; ++i)
          for (int j = 0; 2 * i + j <= ell; ++j) {
            const int k = ell - 2 * i - j;
            if (i + j + k <= n) cn[uniform(a, n, j, k)] += h_computen(n, i, j, k);
          }
        std::erase_if(cn, [](const auto& kv) { return kv.second.is_zero(); });
        c.expect(h_young_all(ell, PaddedShape::from_coweight(uniform(a, n, 0, 0))) == cn,
                 "young vs computen a=" + std::to_string(a) + " n=" + std::to_string(n) + " l=" + std::to_string(ell));
      }
  return c.done("brute on 3 shapes, symbolic on uniform shapes");
}

Outcome dual_one() {
  Check c;
  const int a = 5;
  for (int ell : {2, 3}) {
    const auto fam = enum_row_reps(2, ell, kP);
    c.expect(static_cast<std::int64_t>(fam.count()) == (ell == 2 ? 12 : 36), "representative count");
    const auto counts = brute("-" + std::to_string(ell), SymCoweight{{a}, 0, 0});
    std::int64_t total = 0;
    for (int j = -ell; j <= ell; j += 2) {
      QPoly expected = j == -ell ? QPoly(1) : j == ell ? q_pow(ell) : q_pow((j + ell) / 2 - 1) * (QPoly::q() - QPoly(1));
      c.expect(h_dual1(ell, j) == expected, "formula j=" + std::to_string(j));
      auto it = counts.find(SymCoweight{{a + j}, 0, 0});
      const std::int64_t n = it == counts.end() ? 0 : it->second;
      c.expect(n == expected.eval(kP), "l=" + std::to_string(ell) + " j=" + std::to_string(j));
      total += n;
    }
    c.expect(total == (q_pow(ell - 1) * q_int(2)).eval(kP), "total l=" + std::to_string(ell));
  }
  return c.done("a = 5, l in {2,3}");
}

Outcome dual_n() {
  Check c;
  const int a = 5, n = 2, ell = 2;
  const auto counts = brute("-2", uniform(a, n, 0, 0));
  std::int64_t seen = 0;
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; i + j <= ell; ++j) {
      SymCoweight lambda;
      lambda.big_parts = {a + i, a - j};
      auto it = counts.find(lambda);
      const std::int64_t nb = it == counts.end() ? 0 : it->second;
      seen += nb;
      c.expect(nb == p_dual(n, ell, i, j).eval(kP), "i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  std::int64_t total = 0;
  for (const auto& [l, v] : counts) total += v;
  c.expect(seen == total && total == 1080, "all 1080 representatives land in the case table");
  for (int nn = 2; nn <= 4; ++nn)
    for (int L = 1; L <= 4; ++L) {
      QPoly sum;
      for (int i = 0; i <= L; ++i)
        for (int j = 0; i + j <= L; ++j) {
          sum += p_dual(nn, L, i, j);
          if (i >= j)
            c.expect(p_dual(nn, L, i, j) == q_pow((i - j) * nn) * p_dual(nn, L, j, i),
                     "symmetry n=" + std::to_string(nn) + " l=" + std::to_string(L));
        }
      c.expect(sum == q_pow((2 * nn - 1) * (L - 1)) * q_int(2 * nn), "sum n=" + std::to_string(nn) + " l=" + std::to_string(L));
    }
  return c.done("n=2, a=5, l=2; symbolic n<=4, l<=4");
}

Outcome pieri_suites() {
  Check c;
  const VerifyReport up = verify_pieri(kP, 200, 1);
  const VerifyReport down = verify_dual_pieri(kP, 200, 1);
  c.expect(up.ok(), std::to_string(up.hard_failures()) + " Pieri violations");
  c.expect(down.ok(), std::to_string(down.hard_failures()) + " dual-Pieri violations");
  return c.done(std::to_string(up.cases.size()) + " + " + std::to_string(down.cases.size()) + " cases");
}

Outcome module_identity() {
  Check c;
  for (const char* s : {"3,0", "3,1,0,0"}) {
    const SymCoweight nu = parse_shape(s);
    const auto composed = composed_vertical_action(kP, nu, brute_opts());
    auto rhs = brute("-1^2", nu);
    for (auto& [l, n] : rhs) n *= kP + 1;
    for (const auto& [l, n] : brute("-2", nu)) rhs[l] += n;
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    auto lhs = composed;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    c.expect(lhs == rhs, std::string("nu = ") + s);
    c.expect(verify_module_identity(kP, nu, brute_opts()).ok(), std::string("report for ") + s);
  }
  return c.done("nu in {3,0}, {3,1,0,0}");
}

Outcome determinism() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions serial;
  serial.p = kP;
  serial.seed = 1;
  serial.brute.threads = 1;
  SuiteOptions parallel = serial;
  parallel.brute.threads = 4;
  const std::string first = to_json(run_suite("all", serial)).dump();
  const std::string second = to_json(run_suite("all", serial)).dump();
  const VerifyReport threaded = run_suite("all", parallel);
  c.expect(first == second, "two serial runs differ");
  c.expect(first == to_json(threaded).dump(), "1-thread and 4-thread reports differ");
  c.expect(threaded.ok(), std::to_string(threaded.hard_failures()) + " hard failures");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 600.0, "runtime " + std::to_string(secs) + " s");
  return c.done(std::to_string(threaded.cases.size()) + " cases, " + std::to_string(first.size()) + " bytes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"normal-form round trip", normal_form_round_trip},
      {"coset counts", coset_counts},
      {"compute-n vs brute force", compute_n},
      {"compute-1 vs brute force", compute_1},
      {"main theorem vs brute force", main_theorem},
      {"young tableaux vs brute force", young},
      {"dual single block", dual_one},
      {"dual n blocks", dual_n},
      {"Pieri and dual-Pieri suites", pieri_suites},
      {"module identity", module_identity},
      {"report determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%s; %.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
