#include <gtest/gtest.h>

#include <random>

#include "symhecke/io.hpp"

using namespace symhecke;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_json_text(text, "doc.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, LaurentRoundTrip) {
  const LaurentPoly f = LaurentPoly::from_terms(5, {{-2, 3}, {0, 1}, {7, 4}});
  EXPECT_EQ(to_json(f).dump(), "[[-2,3],[0,1],[7,4]]");
  EXPECT_EQ(laurent_from_json(to_json(f), 5), f);
  EXPECT_THROW(laurent_from_json(Json::parse("[[0,5]]"), 5), DomainError);
  EXPECT_THROW(laurent_from_json(Json::parse("[[0,-1]]"), 5), DomainError);
  EXPECT_THROW(laurent_from_json(Json::parse("{\"e\":1}"), 5), DomainError);
}

TEST(Io, MatrixRoundTrip) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4);
    LMatrix M(3, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (rng() % 2) M(i, j) = LaurentPoly::from_terms(3, {{static_cast<int>(rng() % 7) - 3, 1 + static_cast<std::int64_t>(rng() % 2)}});
    EXPECT_EQ(matrix_from_json(to_json(M)), M);
    EXPECT_EQ(matrix_from_json(parse_json_text(to_json(M).dump())), M);
  }
  EXPECT_EQ(to_json(LMatrix::diag_powers(3, {1, 0})).dump(), R"({"p":3,"dim":2,"entries":[[0,0,[[1,1]]],[1,1,[[0,1]]]]})");
}

TEST(Io, MatrixValidation) {
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"p":4,"dim":1,"entries":[]})")), DomainError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"p":3,"dim":2,"entries":[[2,0,[[0,1]]]]})")), DomainError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"p":3,"entries":[]})")), DomainError);
}

TEST(Io, ParseErrorsCarryPosition) {
  const std::string msg = parse_error_message("{\"p\": 3,\n  \"dim\" 2}");
  EXPECT_EQ(msg.rfind("doc.json:2:", 0), 0u) << msg;
  EXPECT_EQ(parse_error_message("[1, 2]"), "");
  EXPECT_EQ(parse_error_message("").rfind("doc.json:", 0), 0u);
}

TEST(Io, ReadFiles) {
  const std::string dir = SYMHECKE_FIXTURES;
  EXPECT_EQ(read_matrix_file(dir + "/diag_z3_z_1.json"), LMatrix::diag_powers(3, {3, 1, 0}));
  try {
    read_matrix_file(dir + "/malformed.json");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed.json:3:10:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_matrix_file(dir + "/missing.json"), DomainError);
}

TEST(Io, QPolyRoundTrip) {
  const QPoly f = QPoly::from_terms({{0, 1}, {3, -2}, {5, 7}});
  EXPECT_EQ(qpoly_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(QPoly()).dump(), "[]");
  EXPECT_THROW(qpoly_from_json(Json::parse("[[-1,1]]")), DomainError);
}

TEST(Io, ShapeRoundTrip) {
  for (const char* s : {"3,1,0,0", "4,2,2,0,0,0", "1,1,0", "0"}) {
    const SymCoweight c = parse_shape(s);
    EXPECT_EQ(coweight_from_json(to_json(c)), c);
    EXPECT_EQ(coweight_from_json(Json(s)), c);
  }
  EXPECT_EQ(to_json(parse_shape("3,1,0,0")).dump(), R"({"blocks":[3],"z":1,"one":1,"padded":"3,1,0,0"})");
}

TEST(Io, HVectorRoundTripAndCsv) {
  HVector h;
  h.p = 3;
  h.mu = parse_mu("-1^1");
  h.nu = parse_shape("3,0");
  h.family = "vertical(2,1)";
  h.counts = {{parse_shape("2,0"), 1}, {parse_shape("4,0"), 3}};
  EXPECT_EQ(hvector_from_json(to_json(h)), h);
  EXPECT_EQ(hvector_csv(h), "lambda,count\n\"2,0\",1\n\"4,0\",3\n");
}
