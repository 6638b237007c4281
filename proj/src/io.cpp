#include "symhecke/io.hpp"

#include <fstream>
#include <sstream>

namespace symhecke {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

std::int64_t get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string("expected an integer for ") + what);
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] parse error at line ..., column ...: ".
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Json to_json(const LaurentPoly& f) {
  Json a = Json::array();
  for (auto [e, c] : f.terms()) a.push_back(Json::array({e, c}));
  return a;
}

LaurentPoly laurent_from_json(const Json& j, std::uint32_t p) {
  if (!j.is_array()) bad("a Laurent polynomial must be an array of [exponent, coefficient] pairs");
  std::vector<std::pair<int, std::int64_t>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("a Laurent term must be [exponent, coefficient]");
    const std::int64_t e = get_int(t[0], "exponent"), c = get_int(t[1], "coefficient");
    if (c < 0 || c >= static_cast<std::int64_t>(p)) bad("coefficient " + std::to_string(c) + " is outside [0, p)");
    if (e < -(1 << 20) || e > (1 << 20)) bad("exponent out of range");
    terms.emplace_back(static_cast<int>(e), c);
  }
  return LaurentPoly::from_terms(p, terms);
}

Json to_json(const QPoly& f) {
  Json a = Json::array();
  for (auto [d, c] : f.terms()) a.push_back(Json::array({d, c}));
  return a;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) bad("a q-polynomial must be an array of [degree, coefficient] pairs");
  std::vector<std::pair<int, std::int64_t>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("a q-polynomial term must be [degree, coefficient]");
    const std::int64_t d = get_int(t[0], "degree");
    if (d < 0 || d > (1 << 20)) bad("degree out of range");
    terms.emplace_back(static_cast<int>(d), get_int(t[1], "coefficient"));
  }
  return QPoly::from_terms(terms);
}

Json to_json(const LMatrix& M) {
  Json entries = Json::array();
  for (int i = 0; i < M.rows(); ++i)
    for (int k = 0; k < M.cols(); ++k)
      if (!M(i, k).is_zero()) entries.push_back(Json::array({i, k, to_json(M(i, k))}));
  Json j;
  j["p"] = M.prime();
  j["dim"] = M.dim();
  j["entries"] = std::move(entries);
  return j;
}

LMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("a matrix must be a JSON object");
  const std::int64_t p = get_int(field(j, "p"), "p");
  if (p < 3) bad("p must be an odd prime");
  try {
    require_odd_prime(static_cast<std::uint64_t>(p));
  } catch (const DomainError& e) {
    bad(e.what());
  }
  const std::int64_t m = get_int(field(j, "dim"), "dim");
  if (m < 1 || m > 64) bad("dim must lie in [1, 64]");
  LMatrix M(static_cast<std::uint32_t>(p), static_cast<int>(m));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) bad("an entry must be [row, col, terms]");
    const std::int64_t r = get_int(e[0], "row"), c = get_int(e[1], "col");
    if (r < 0 || r >= m || c < 0 || c >= m) bad("entry index out of range");
    M(static_cast<int>(r), static_cast<int>(c)) += laurent_from_json(e[2], static_cast<std::uint32_t>(p));
  }
  return M;
}

LMatrix read_matrix_file(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return matrix_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const SymCoweight& s) {
  Json j;
  j["blocks"] = s.big_parts;
  j["z"] = s.count_z;
  j["one"] = s.count_one;
  j["padded"] = s.padded().to_string();
  return j;
}

SymCoweight coweight_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_shape(j.get<std::string>());
    } catch (const DomainError& e) {
      bad(e.what());
    }
  }
  SymCoweight s;
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) bad("blocks must be an array");
  for (const auto& b : blocks) {
    const std::int64_t x = get_int(b, "block exponent");
    if (x < 2 || x > (1 << 20)) bad("block exponents must be at least 2");
    s.big_parts.push_back(static_cast<int>(x));
  }
  std::sort(s.big_parts.begin(), s.big_parts.end(), std::greater<>());
  const std::int64_t z = get_int(field(j, "z"), "z"), one = get_int(field(j, "one"), "one");
  if (z < 0 || one < 0 || z > 4096 || one > 4096) bad("block counts out of range");
  s.count_z = static_cast<int>(z);
  s.count_one = static_cast<int>(one);
  return s;
}

Json to_json(const HVector& h) {
  Json j;
  j["p"] = h.p;
  j["mu"] = h.mu.to_string();
  j["nu"] = h.nu.padded().to_string();
  j["family"] = h.family;
  j["total"] = h.total();
  Json counts = Json::array();
  for (const auto& [lam, c] : h.counts) counts.push_back(Json::array({lam.padded().to_string(), c}));
  j["counts"] = std::move(counts);
  return j;
}

HVector hvector_from_json(const Json& j) {
  HVector h;
  const std::int64_t p = get_int(field(j, "p"), "p");
  if (p < 3 || p > INT32_MAX) bad("p out of range");
  h.p = static_cast<std::uint32_t>(p);
  try {
    h.mu = parse_mu(field(j, "mu").get<std::string>());
    h.nu = parse_shape(field(j, "nu").get<std::string>());
  } catch (const nlohmann::json::exception&) {
    bad("mu and nu must be strings");
  } catch (const DomainError& e) {
    bad(e.what());
  }
  if (field(j, "family").is_string()) h.family = field(j, "family").get<std::string>();
  const Json& counts = field(j, "counts");
  if (!counts.is_array()) bad("counts must be an array");
  for (const auto& e : counts) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) bad("a count must be [\"lambda\", n]");
    const std::int64_t c = get_int(e[1], "count");
    if (c < 0) bad("counts must be nonnegative");
    try {
      h.counts[parse_shape(e[0].get<std::string>())] += c;
    } catch (const DomainError& ex) {
      bad(ex.what());
    }
  }
  return h;
}

std::string hvector_csv(const HVector& h) {
  std::ostringstream os;
  os << "lambda,count\n";
  for (const auto& [lam, c] : h.counts) os << '"' << lam.padded().to_string() << "\"," << c << "\n";
  return os.str();
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["prime"] = r.p;
  j["seed"] = r.seed;
  Json summary;
  summary["cases"] = r.cases.size();
  summary["passed"] = r.passed();
  summary["hard_failures"] = r.hard_failures();
  summary["flagged_mismatches"] = r.flagged_mismatches();
  summary["ok"] = r.ok();
  j["summary"] = std::move(summary);
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json e;
    e["suite"] = c.suite;
    e["rule"] = c.rule;
    e["query"] = c.query;
    if (c.brute) e["brute"] = *c.brute;
    if (c.value) e["value"] = *c.value;
    if (!c.formula.empty()) e["formula"] = c.formula;
    if (!c.expected.empty()) e["expected"] = c.expected;
    e["match"] = c.match;
    if (c.flagged) e["flagged"] = true;
    if (!c.witnesses.empty()) {
      Json w = Json::array();
      for (const auto& s : c.witnesses) w.push_back(Json::parse(s));
      e["witnesses"] = std::move(w);
    }
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(Json{{"id", f.id}, {"text", f.text}});
  j["findings"] = std::move(findings);
  return j;
}

Json to_json(const TupleClass& c) {
  Json j;
  Json big = Json::array();
  for (const auto& e : c.omega.big)
    big.push_back(Json{{"value", e.value}, {"w00", e.w00}, {"w11", e.w11}, {"minus", e.minus}, {"plus", e.plus}});
  j["omega"] = Json{{"big", std::move(big)},
                    {"pairs", c.omega.one.pairs},
                    {"one_to_zero", c.omega.one.one_to_zero},
                    {"zero_to_one", c.omega.one.zero_to_one}};
  Json pairs = Json::array();
  for (auto [a, b] : c.representative.pairs) pairs.push_back(Json::array({a, b}));
  j["representative"] = Json{{"w", c.representative.w}, {"pairs", std::move(pairs)}, {"hat", c.representative.hat}};
  j["members"] = c.members;
  return j;
}

Json to_json(const PairedTableau& t) {
  Json j;
  j["nu"] = t.diagram.nu.to_string();
  j["boxes"] = t.diagram.boxes;
  j["fill"] = t.fill;
  j["reduced"] = t.diagram.reduced_shape().padded().to_string();
  Json w = Json::array();
  for (const auto& x : tableau_weights(t)) w.push_back(x.to_string());
  j["weights"] = std::move(w);
  j["weight"] = tableau_weight(t).to_string();
  return j;
}

}  // namespace symhecke
