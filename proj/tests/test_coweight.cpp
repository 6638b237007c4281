#include <gtest/gtest.h>

#include <random>

#include "symhecke/coweight.hpp"

using namespace symhecke;

namespace {

LaurentPoly mono(int e, std::int64_t c = 1) { return LaurentPoly::monomial(3, e, c); }

LMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  LMatrix M(3, 2);
  M(0, 0) = a;
  M(0, 1) = b;
  M(1, 0) = c;
  M(1, 1) = d;
  return M;
}

LMatrix block(int i) { return mat2(mono(0), mono(1), LaurentPoly(3), mono(i)); }

}  // namespace

TEST(Partition, ParseAndShape) {
  EXPECT_EQ(parse_partition("3, 1,0").parts(), (std::vector<int>{3, 1, 0}));
  EXPECT_THROW(Partition({1, 3}), DomainError);
  EXPECT_EQ(Partition::sorted({0, 3, -1}).to_string(), "3,0,-1");
  EXPECT_EQ(Partition({3, 3, 0}).multiplicity(3), 2);
}

TEST(SymCoweightTest, PaddedRoundTrip) {
  const SymCoweight s = parse_shape("3,1,0,0");
  EXPECT_EQ(s.big_parts, std::vector<int>{3});
  EXPECT_EQ(s.count_z, 1);
  EXPECT_EQ(s.count_one, 1);
  EXPECT_EQ(s.dim(), 4);
  EXPECT_EQ(s.padded().to_string(), "3,1,0,0");
  EXPECT_EQ(parse_shape("blocks=3;z=1;one=1"), s);
  EXPECT_EQ(parse_shape("blocks=;z=2;one=0").padded().to_string(), "1,1");
  EXPECT_EQ(parse_shape("blocks=4,2;z=0;one=0").padded().to_string(), "4,2,0,0");
  EXPECT_EQ(SymCoweight({{3}, 0, 0}).describe(), "blocks: [3]; z:0; one:0; padded: 3,0");
  EXPECT_THROW(parse_shape("3,1"), DomainError);  // too few zeros for the part 3
}

TEST(DominantCoweight, Examples) {
  EXPECT_EQ(dominant_coweight(LMatrix::diag_powers(3, {3, 1, 0})).parts(), (std::vector<int>{3, 1, 0}));
  for (int i = 2; i <= 6; ++i) EXPECT_EQ(dominant_coweight(block(i)).parts(), (std::vector<int>{i, 0}));
  // Entry gcd z^3 and determinant z^10.
  EXPECT_EQ(dominant_coweight(mat2(mono(5), mono(3, -2), LaurentPoly(3), mono(5, -1))).parts(),
            (std::vector<int>{7, 3}));
}

TEST(DominantCoweight, ScalarShift) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const LMatrix B = sample_equivalent(block(3 + static_cast<int>(rng() % 3)), rng());
    const Partition r = dominant_coweight(B);
    for (int k : {-3, -1, 0, 2, 5})
      EXPECT_EQ(dominant_coweight(B.scaled_by(mono(k))), r.shifted(k));
  }
}

TEST(DominantCoweight, SingularIsAnError) {
  EXPECT_THROW(dominant_coweight(mat2(mono(0), mono(1), mono(0), mono(1))), SingularMatrixError);
}

TEST(HatInvariants, Examples) {
  for (int i = 2; i <= 6; ++i) EXPECT_EQ(hat_invariants(block(i)), (HatInvariants{{i}, i % 2}));
  EXPECT_EQ(hat_invariants(LMatrix::diag_powers(3, {1, 0})), (HatInvariants{{}, 1}));
  EXPECT_EQ(hat_invariants(mat2(mono(1), mono(2), LaurentPoly(3), mono(4))), (HatInvariants{{3}, 1}));
}

TEST(Sigma, Examples) {
  EXPECT_EQ(symmetric_coweight(LMatrix::diag_powers(3, {0, 1})), (SymCoweight{{}, 1, 1}));
  EXPECT_EQ(symmetric_coweight(LMatrix::direct_sum(block(3), block(2))).padded().to_string(), "3,2,0,0");
  // An even elementary right factor preserves the class; diag(z,1) on the left does not.
  LMatrix E = LMatrix::identity(3, 2);
  E(0, 1) = mono(2) + mono(-2, 2);
  EXPECT_EQ(symmetric_coweight(block(3) * E).padded().to_string(), "3,0");
  const LMatrix A = LMatrix::diag_powers(3, {1, 0});
  EXPECT_EQ(symmetric_coweight(A * block(3) * E).padded().to_string(), "2,0");
  EXPECT_EQ(sigma_from_invariants(A * block(3) * E).padded().to_string(), "2,0");
}

TEST(Sigma, NegativeValuationsAreScaled) {
  const LMatrix B = block(4).scaled_by(mono(-6));
  EXPECT_EQ(symmetric_coweight(B), symmetric_coweight(block(4)));
  EXPECT_EQ(sigma_from_invariants(B), symmetric_coweight(block(4)));
}

TEST(Sigma, InvariantsAgreeWithReduction) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4);
    SymCoweight s;
    const int nbig = static_cast<int>(rng() % (m / 2 + 1));
    for (int i = 0; i < nbig; ++i) s.big_parts.push_back(2 + static_cast<int>(rng() % 4));
    std::sort(s.big_parts.rbegin(), s.big_parts.rend());
    s.count_z = static_cast<int>(rng() % (m - 2 * nbig + 1));
    s.count_one = m - 2 * nbig - s.count_z;
    const LMatrix B = sample_equivalent(canonical_matrix(3, s), rng());
    const SymCoweight got = symmetric_coweight(B);
    EXPECT_EQ(got, s);
    EXPECT_EQ(sigma_from_invariants(B), s);
    const HatInvariants h = hat_invariants(B);
    EXPECT_EQ(h.big_parts, got.big_parts);
    int sum = got.count_z;
    for (int a : got.big_parts) sum += a;
    EXPECT_EQ(sum % 2, h.parity);
    EXPECT_EQ(projection_defect(B), got.count_z + static_cast<int>(got.big_parts.size()));
  }
}

TEST(CanonicalMatrix, ReadsBack) {
  for (const char* s : {"3,1,0,0", "1,1,0", "4,2,0,0", "0", "5,0"}) {
    const SymCoweight c = parse_shape(s);
    EXPECT_EQ(read_block_form(canonical_matrix(3, c)), c) << s;
  }
  EXPECT_FALSE(read_block_form(mat2(mono(1), mono(1), LaurentPoly(3), mono(3))).has_value());
}

TEST(Strips, Relations) {
  EXPECT_TRUE(vertical_strip(Partition({3, 0}), Partition({2, 0})));
  EXPECT_TRUE(vertical_strip(Partition({3, 0}), Partition({4, 1})));
  EXPECT_FALSE(vertical_strip(Partition({3, 0}), Partition({5, 0})));
  EXPECT_TRUE(interlaces(Partition({5, 0}), Partition({7, 0})));
  EXPECT_TRUE(interlaces(Partition({5, 3, 0}), Partition({6, 3, 0})));
  EXPECT_FALSE(interlaces(Partition({5, 3, 0}), Partition({6, 6, 0})));
}

TEST(Pieri, Examples) {
  EXPECT_TRUE(pieri_check(LMatrix::diag_powers(3, {1, 1}), block(3)));
  EXPECT_TRUE(pieri_check(LMatrix::identity(3, 2), block(3)));
  EXPECT_TRUE(pieri_check(LMatrix::diag_powers(3, {1, 0}), block(3)));
  EXPECT_TRUE(dual_pieri_check(LMatrix::diag_powers(3, {2, 0}), block(5)));
  EXPECT_THROW(pieri_check(LMatrix::diag_powers(3, {2, 0}), block(3)), DomainError);
  EXPECT_THROW(dual_pieri_check(LMatrix::diag_powers(3, {1, 1}), block(3)), DomainError);
}
