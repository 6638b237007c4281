#pragma once

#include <string>

#include <json.hpp>

#include "symhecke/combinatorics.hpp"
#include "symhecke/engine.hpp"
#include "symhecke/laurent.hpp"
#include "symhecke/matrix.hpp"
#include "symhecke/partition.hpp"
#include "symhecke/qpoly.hpp"

namespace symhecke {

using Json = nlohmann::ordered_json;

/// Malformed input; the message starts with "<source>:<line>:<column>:" when
/// the position is known.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

Json parse_json_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

/// [[exponent, coefficient], ...] with 0 <= coefficient < p.
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, std::uint32_t p);

/// [[degree, coefficient], ...].
Json to_json(const QPoly& f);
QPoly qpoly_from_json(const Json& j);

/// {"p", "dim", "entries": [[row, col, terms], ...]}, zero entries omitted.
Json to_json(const LMatrix& M);
LMatrix matrix_from_json(const Json& j);
LMatrix read_matrix_file(const std::string& path);

/// {"blocks": [...], "z": n, "one": n, "padded": "3,0"}.
Json to_json(const SymCoweight& s);
SymCoweight coweight_from_json(const Json& j);

Json to_json(const HVector& h);
HVector hvector_from_json(const Json& j);
/// "lambda,count" rows under a header line.
std::string hvector_csv(const HVector& h);

Json to_json(const VerifyReport& r);

Json to_json(const TupleClass& c);
Json to_json(const PairedTableau& t);

}  // namespace symhecke
