#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <ostream>
#include <sstream>

#include "symhecke/combinatorics.hpp"
#include "symhecke/cosets.hpp"
#include "symhecke/coweight.hpp"
#include "symhecke/engine.hpp"
#include "symhecke/formulas.hpp"
#include "symhecke/io.hpp"

namespace symhecke::cli {

namespace {

LMatrix load_matrix(const RunConfig& cfg, const std::string& path) {
  LMatrix B = read_matrix_file(path);
  if (B.det().is_zero()) throw SingularMatrixError(path + ": matrix is singular");
  if (cfg.precision > 0 && cfg.precision < policy_precision(B))
    throw DomainError("--precision " + std::to_string(cfg.precision) + " is below the policy floor " +
                      std::to_string(policy_precision(B)) + " for this matrix");
  return B;
}

SigmaOptions sigma_options(const RunConfig& cfg) { return SigmaOptions{cfg.precision, 4}; }

BruteOptions brute_options(const RunConfig& cfg) {
  BruteOptions o;
  o.threads = cfg.threads;
  o.budget = cfg.budget;
  o.force = cfg.force;
  o.sigma = cfg.certified ? SigmaMode::Certified : SigmaMode::Invariants;
  o.precision = cfg.precision;
  return o;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& item : raw) {
    std::string token;
    std::istringstream is(item);
    while (std::getline(is, token, ';')) {
      std::istringstream ws(token);
      std::string kv;
      while (ws >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("parameter '" + kv + "' is not key=value");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
    }
  }
  return out;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}
  int integer(const std::string& key) {
    const std::string& s = text(key);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw DomainError("parameter " + key + "=" + s + " is not an integer");
    return v;
  }
  const std::string& text(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw DomainError("missing parameter " + key);
    used_.insert(key);
    return it->second;
  }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  void finish() const {
    for (const auto& [k, v] : kv_)
      if (!used_.count(k)) throw DomainError("unknown parameter " + k);
  }

 private:
  std::map<std::string, std::string> kv_;
  std::set<std::string> used_;
};

void print_poly(std::ostream& out, const QPoly& f, std::optional<std::int64_t> at) {
  out << to_json(f).dump() << "\n";
  if (at) out << f.eval(*at) << "\n";
}

void print_poly_map(std::ostream& out, const std::map<SymCoweight, QPoly>& m, std::optional<std::int64_t> at) {
  Json j = Json::object();
  for (const auto& [lam, f] : m) j[lam.padded().to_string()] = to_json(f);
  out << j.dump() << "\n";
  if (at) {
    Json v = Json::object();
    for (const auto& [lam, f] : m) v[lam.padded().to_string()] = f.eval(*at);
    out << v.dump() << "\n";
  }
}

}  // namespace

int cmd_rho(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out) {
  const Partition r = dominant_coweight(load_matrix(cfg, matrix_file));
  if (cfg.format == Format::Json)
    out << Json{{"rho", r.parts()}}.dump() << "\n";
  else
    out << r.to_string() << "\n";
  return kOk;
}

int cmd_sigma(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out) {
  const SymCoweight s = symmetric_coweight(load_matrix(cfg, matrix_file), sigma_options(cfg));
  if (cfg.format == Format::Json)
    out << to_json(s).dump() << "\n";
  else
    out << s.describe() << "\n";
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, const std::string& matrix_file, std::ostream& out) {
  const LMatrix B = load_matrix(cfg, matrix_file);
  const SymCoweight s = symmetric_coweight(B, sigma_options(cfg));
  const int N = cfg.precision > 0 ? cfg.precision : policy_precision(B);
  const ReductionWitness w = block_reduce(B, N);
  if (cfg.format == Format::Json) {
    Json j;
    j["sigma"] = to_json(s);
    j["precision"] = w.precision;
    j["Lambda"] = to_json(w.Lambda);
    j["g"] = to_json(w.g.known_part());
    j["h"] = to_json(w.h.known_part());
    out << j.dump() << "\n";
  } else {
    out << s.describe() << "\n" << w.Lambda.to_string() << "\n";
  }
  return kOk;
}

int cmd_cosets_enum(const RunConfig& cfg, int dim, const std::string& mu, std::uint64_t limit, std::ostream& out) {
  const CosetFamily f = CosetFamily::from_mu(dim, parse_mu(mu), cfg.prime);
  if (!cfg.force && f.index_space() > cfg.budget)
    throw BudgetError("family has " + std::to_string(f.index_space()) + " candidates, above the budget (use --force)");
  std::uint64_t emitted = 0;
  for (std::uint64_t i = 0; i < f.index_space() && (limit == 0 || emitted < limit); ++i)
    if (auto X = f.candidate(i)) {
      out << to_json(*X).dump() << "\n";
      ++emitted;
    }
  return kOk;
}

int cmd_cosets_count(const RunConfig&, int dim, const std::string& mu, std::optional<std::int64_t> at,
                     std::ostream& out) {
  MuSpec spec = parse_mu(mu);
  spec.negative = false;
  if (dim < 1) throw DomainError("--dim must be positive");
  print_poly(out, coset_count(dim, spec.partition(dim)), at);
  return kOk;
}

int cmd_brute(const RunConfig& cfg, const std::string& mu, const std::string& nu, const std::string& lambda,
              std::ostream& out) {
  const HVector h = h_bruteforce(cfg.prime, parse_mu(mu), parse_shape(nu), brute_options(cfg));
  if (!lambda.empty()) {
    const SymCoweight lam = parse_shape(lambda);
    if (lam.dim() != h.nu.dim()) throw DomainError("lambda and nu have different dimensions");
    if (cfg.format == Format::Json)
      out << Json{{"lambda", lam.padded().to_string()}, {"count", h.at(lam)}}.dump() << "\n";
    else if (cfg.format == Format::Csv)
      out << "lambda,count\n\"" << lam.padded().to_string() << "\"," << h.at(lam) << "\n";
    else
      out << h.at(lam) << "\n";
    return kOk;
  }
  if (cfg.format == Format::Json) {
    out << to_json(h).dump() << "\n";
  } else if (cfg.format == Format::Csv) {
    out << hvector_csv(h);
  } else {
    out << h.family << " on nu=" << h.nu.padded().to_string() << " at p=" << h.p << "\n";
    for (const auto& [lam, c] : h.counts) out << "  " << std::left << std::setw(16) << lam.padded().to_string() << c << "\n";
    out << "  total " << h.total() << "\n";
  }
  return kOk;
}

int cmd_formula(const RunConfig&, const std::string& rule, const std::vector<std::string>& raw,
                std::optional<std::int64_t> at, bool dump_witnesses, std::ostream& out) {
  Params ps(parse_params(raw));
  Json witnesses = Json::array();
  auto shape = [&](const std::string& key) { return PaddedShape::parse(ps.text(key)); };

  if (rule == "computen") {
    const int n = ps.integer("n"), i = ps.integer("i"), j = ps.integer("j"), k = ps.integer("k");
    ps.finish();
    print_poly(out, h_computen(n, i, j, k), at);
  } else if (rule == "compute1") {
    const int n1 = ps.integer("n1"), n2 = ps.integer("n2");
    const int A = ps.integer("A"), B = ps.integer("B"), C = ps.integer("C");
    ps.finish();
    print_poly(out, h_compute1(n1, n2, A, B, C), at);
  } else if (rule == "dual-n") {
    const int n = ps.integer("n"), l = ps.integer("l"), i = ps.integer("i"), j = ps.integer("j");
    ps.finish();
    print_poly(out, p_dual(n, l, i, j), at);
  } else if (rule == "dual-1") {
    const int l = ps.integer("l"), j = ps.integer("j");
    ps.finish();
    print_poly(out, h_dual1(l, j), at);
  } else if (rule == "mainthm" || rule == "corollary" || rule == "young") {
    const int l = ps.integer("l");
    const PaddedShape nu = shape("nu");
    std::optional<PaddedShape> lam;
    if (ps.has("lambda")) lam = shape("lambda");
    ps.finish();
    if (lam && lam->n() != nu.n()) throw DomainError("lambda and nu have different lengths");
    if (rule == "young") {
      if (lam)
        print_poly(out, h_young(l, nu, *lam), at);
      else
        print_poly_map(out, h_young_all(l, nu), at);
      if (dump_witnesses) {
        auto diagrams = lam ? enum_paired_diagrams(l, nu, *lam) : enum_paired_diagrams(l, nu);
        for (const auto& d : diagrams)
          for (const auto& t : enum_tableaux(d)) witnesses.push_back(to_json(t));
      }
    } else {
      if (rule == "corollary") {
        if (!lam) throw DomainError("corollary needs lambda");
        print_poly(out, h_corollary(l, nu, *lam), at);
      } else if (lam) {
        print_poly(out, h_mainthm(l, nu, *lam), at);
      } else {
        print_poly_map(out, h_mainthm_all(l, nu), at);
      }
      if (dump_witnesses) {
        for (const auto& [shape_l, classes] : paired_tuple_classes(l, nu)) {
          if (lam && !(shape_l == lam->coweight())) continue;
          for (const auto& c : classes) {
            Json w = to_json(c);
            w["lambda"] = shape_l.padded().to_string();
            witnesses.push_back(std::move(w));
          }
        }
      }
    }
  } else {
    throw DomainError("unknown rule '" + rule + "'");
  }
  if (dump_witnesses) out << Json{{"witnesses", std::move(witnesses)}}.dump() << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int trials, std::ostream& out) {
  if (!known_suite(suite)) throw DomainError("unknown suite '" + suite + "'");
  SuiteOptions o;
  o.p = cfg.prime;
  o.seed = cfg.seed;
  o.trials = trials;
  o.brute = brute_options(cfg);
  const VerifyReport rep = run_suite(suite, o);
  const std::string text = to_json(rep).dump(2) + "\n";
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw DomainError("cannot write " + cfg.out);
    f << text;
  } else if (cfg.format == Format::Json) {
    out << text;
    return rep.ok() ? kOk : kMismatch;
  }

  struct Row {
    std::size_t cases = 0, passed = 0, flagged = 0;
  };
  std::map<std::string, Row> rows;
  for (const auto& c : rep.cases) {
    Row& r = rows[c.rule];
    ++r.cases;
    r.passed += c.match;
    r.flagged += !c.match && c.flagged;
  }
  out << std::left << std::setw(22) << "rule" << std::right << std::setw(8) << "cases" << std::setw(8) << "pass"
      << std::setw(9) << "flagged" << "\n";
  for (const auto& [rule, r] : rows)
    out << std::left << std::setw(22) << rule << std::right << std::setw(8) << r.cases << std::setw(8) << r.passed
        << std::setw(9) << r.flagged << "\n";
  out << "total " << rep.cases.size() << ", passed " << rep.passed() << ", hard failures " << rep.hard_failures()
      << ", flagged mismatches " << rep.flagged_mismatches() << ", findings " << rep.findings.size() << "\n";
  out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? kOk : kMismatch;
}

}  // namespace symhecke::cli
