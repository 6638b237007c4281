#include "symhecke/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symhecke/field.hpp"

namespace symhecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
}

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::shifted(int k) const {
  auto p = parts_;
  for (auto& x : p) x += k;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {
std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string t = strip(s);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = strip(tok);
    if (tok.empty()) throw DomainError("empty entry in list '" + s + "'");
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw DomainError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}
}  // namespace

Partition parse_partition(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.empty()) throw DomainError("empty partition");
  return Partition(std::move(v));
}

Partition SymCoweight::padded() const {
  std::vector<int> p(big_parts.begin(), big_parts.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  p.insert(p.end(), count_z, 1);
  p.insert(p.end(), big_parts.size() + count_one, 0);
  return Partition(std::move(p));
}

SymCoweight SymCoweight::from_padded(const Partition& p) {
  SymCoweight s;
  int zeros = 0;
  for (int x : p.parts()) {
    if (x < 0) throw DomainError("padded shape has a negative part");
    if (x >= 2) s.big_parts.push_back(x);
    else if (x == 1) ++s.count_z;
    else ++zeros;
  }
  s.count_one = zeros - static_cast<int>(s.big_parts.size());
  if (s.count_one < 0)
    throw DomainError("padded shape " + p.to_string() + " has fewer zeros than parts >= 2");
  return s;
}

std::string SymCoweight::describe() const {
  std::ostringstream os;
  os << "blocks: [";
  for (std::size_t i = 0; i < big_parts.size(); ++i) os << (i ? "," : "") << big_parts[i];
  os << "]; z:" << count_z << "; one:" << count_one << "; padded: " << padded().to_string();
  return os.str();
}

SymCoweight parse_shape(const std::string& raw) {
  std::string s = strip(raw);
  if (s.find('=') == std::string::npos) return SymCoweight::from_padded(parse_partition(s));
  SymCoweight out;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, ';')) {
    field = strip(field);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos) throw DomainError("expected key=value in shape '" + raw + "'");
    std::string key = strip(field.substr(0, eq));
    std::string val = field.substr(eq + 1);
    if (key == "blocks") {
      out.big_parts = parse_int_list(val);
    } else if (key == "z" || key == "one") {
      auto v = parse_int_list(val);
      if (v.size() != 1 || v[0] < 0) throw DomainError("bad count for '" + key + "'");
      (key == "z" ? out.count_z : out.count_one) = v[0];
    } else {
      throw DomainError("unknown shape key '" + key + "'");
    }
  }
  for (int b : out.big_parts)
    if (b < 2) throw DomainError("two-dimensional block exponents must be >= 2");
  std::sort(out.big_parts.begin(), out.big_parts.end(), std::greater<>());
  return out;
}

}  // namespace symhecke
