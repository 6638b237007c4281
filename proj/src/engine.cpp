#include "symhecke/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "symhecke/io.hpp"

namespace symhecke {

namespace {

int env_threads() {
  const char* s = std::getenv("SYMHECKE_THREADS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) return 0;
  return static_cast<int>(std::min(v, 256L));
}

std::string family_id(const CosetFamily& f) {
  std::ostringstream os;
  os << (f.kind() == CosetKind::Vertical ? "vertical(" : "row(") << f.dim() << "," << f.ell() << ")";
  return os.str();
}

SymCoweight sigma_of(const LMatrix& B, const BruteOptions& opts) {
  if (opts.sigma == SigmaMode::Certified) return symmetric_coweight(B, SigmaOptions{opts.precision, 4});
  return sigma_from_invariants(B);
}

CosetFamily family_for(std::uint32_t p, const MuSpec& mu, const SymCoweight& nu, const BruteOptions& opts) {
  require_odd_prime(p);
  const int m = nu.dim();
  if (m < 1) throw DomainError("nu must have positive dimension");
  if (mu.kind == CosetKind::Vertical && (mu.ell < 0 || mu.ell > m))
    throw DomainError("mu = " + mu.to_string() + " does not fit in dimension " + std::to_string(m));
  if (mu.kind == CosetKind::Row && mu.ell < 0) throw DomainError("mu = " + mu.to_string() + " is not supported");
  CosetFamily f = CosetFamily::from_mu(m, mu, p);
  if (!opts.force && f.index_space() > opts.budget)
    throw BudgetError("enumeration of " + std::to_string(f.index_space()) + " candidates exceeds the budget of " +
                      std::to_string(opts.budget) + " (use --force)");
  return f;
}

/// Runs f over [0, total) split into chunks, one tally per worker. The
/// earliest failing chunk determines the rethrown exception.
template <class Tally, class Body>
std::vector<Tally> run_chunked(std::uint64_t total, int workers, Body body) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64ULL * workers));
  const std::uint64_t step = (total + chunks - 1) / std::max<std::uint64_t>(chunks, 1);
  std::vector<Tally> tallies(workers);
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::uint64_t err_chunk = UINT64_MAX;
  std::exception_ptr err;
  auto work = [&](int w) {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      const std::uint64_t begin = c * step;
      if (begin >= total) return;
      try {
        body(tallies[w], begin, std::min(total, begin + step));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (c < err_chunk) {
          err_chunk = c;
          err = std::current_exception();
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return tallies;
}

}  // namespace

int worker_count(int requested) {
  const int env = env_threads();
  int n = requested > 0 ? requested : env;
  if (n <= 0) n = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (env > 0) n = std::min(n, env);
  return std::max(1, n);
}

std::int64_t HVector::total() const {
  std::int64_t s = 0;
  for (const auto& [lam, c] : counts) s += c;
  return s;
}

std::int64_t HVector::at(const SymCoweight& lambda) const {
  auto it = counts.find(lambda);
  return it == counts.end() ? 0 : it->second;
}

HVector h_bruteforce(std::uint32_t p, const MuSpec& mu, const SymCoweight& nu, const BruteOptions& opts) {
  const CosetFamily fam = family_for(p, mu, nu, opts);
  const LMatrix Pi = canonical_matrix(p, nu);
  using Tally = std::map<SymCoweight, std::int64_t>;
  auto tallies = run_chunked<Tally>(fam.index_space(), worker_count(opts.threads),
                                    [&](Tally& t, std::uint64_t b, std::uint64_t e) {
                                      fam.for_each(b, e, [&](const LMatrix& X) {
                                        const LMatrix B = X * Pi;
                                        try {
                                          ++t[sigma_of(B, opts)];
                                        } catch (const std::exception& ex) {
                                          const std::string mj = to_json(X).dump();
                                          throw EnumerationError(std::string("sigma failed for X = ") + mj + ": " +
                                                                     ex.what(),
                                                                 mj);
                                        }
                                      });
                                    });
  HVector h{p, mu, nu, family_id(fam), {}};
  for (const auto& t : tallies)
    for (const auto& [lam, c] : t) h.counts[lam] += c;
  return h;
}

std::vector<LMatrix> brute_witnesses(std::uint32_t p, const MuSpec& mu, const SymCoweight& nu,
                                     const SymCoweight& lambda, std::size_t limit, const BruteOptions& opts) {
  const CosetFamily fam = family_for(p, mu, nu, opts);
  const LMatrix Pi = canonical_matrix(p, nu);
  std::vector<LMatrix> out;
  for (std::uint64_t i = 0; i < fam.index_space() && out.size() < limit; ++i) {
    auto X = fam.candidate(i);
    if (X && sigma_of(*X * Pi, opts) == lambda) out.push_back(*X);
  }
  return out;
}

}  // namespace symhecke
