#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace tnz;

namespace {

RationalMatrix small_example() { return parse_matrix(R"({"m":2,"n":3,"entries":[["1","0","1"],["0","1","1"]]})"); }

std::string parse_error_of(const std::string& text) {
  try {
    parse_matrix(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(MatrixParse, IdentityAndLiteralRead) {
  const RationalMatrix id = parse_matrix(R"({"m":2,"n":2,"entries":[["1","0"],["0","1"]]})");
  EXPECT_EQ(id(0, 0), Rational(1));
  EXPECT_EQ(id(0, 1), Rational(0));
  const RationalMatrix m = small_example();
  EXPECT_EQ(m(0, 2), Rational(1));
  EXPECT_EQ(m(1, 2), Rational(1));
  EXPECT_EQ(m(1, 0), Rational(0));
}

TEST(MatrixParse, Errors) {
  EXPECT_EQ(parse_error_of(R"({"m":1,"n":1,"entries":[["2/0"]]})"), "zero denominator at (1,1)");
  EXPECT_NE(parse_error_of(R"({"m":2,"n":2,"entries":[["1","0"],["1"]]})").find("ragged"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"m":3,"n":2,"entries":[["1","0"],["0","1"],["1","1"]]})").find("m > n"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"m":1,"n":2,"entries":[["1","x"]]})"), "no error");
  EXPECT_NE(parse_error_of("not json"), "no error");
  EXPECT_NE(parse_error_of(R"({"m":1,"n":2})"), "no error");
}

TEST(MatrixJson, RoundTrip) {
  SplitMix64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const RationalMatrix m = fixtures::random_rational_matrix(rng, 3, 5);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  }
}

TEST(Minors, HandComputedValues) {
  const RationalMatrix m = small_example();
  EXPECT_EQ(maximal_minor(m, {1, 2}), Rational(1));
  EXPECT_EQ(maximal_minor(m, {1, 3}), Rational(1));
  EXPECT_EQ(maximal_minor(m, {2, 3}), Rational(-1));
  const RationalMatrix id = parse_matrix(R"({"m":2,"n":2,"entries":[["1","0"],["0","1"]]})");
  EXPECT_EQ(maximal_minor(id, {1, 2}), Rational(1));
}

TEST(Minors, LeftActionScalesByDeterminant) {
  const RationalMatrix a = RationalMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  ASSERT_EQ(determinant(a), Rational(-2));
  EXPECT_EQ(maximal_minor(left_multiply(a, small_example()), {2, 3}), Rational(2));

  SplitMix64 rng(11);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 10; ++t) {
      const RationalMatrix mat = fixtures::random_rational_matrix(rng, m, m + 3);
      const RationalMatrix g = fixtures::random_rational_matrix(rng, m, m);
      const Rational det_g = determinant(g);
      const RationalMatrix moved = left_multiply(g, mat);
      for (const Subset& s : SubsetIndexer::shared(m + 3, m).subsets()) ASSERT_EQ(maximal_minor(moved, s), det_g * maximal_minor(mat, s));
    }
}

TEST(Minors, AgreeWithCofactorExpansion) {
  SplitMix64 rng(5);
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= m + 3; ++n)
      for (int t = 0; t < 8; ++t) {
        const RationalMatrix mat = fixtures::random_rational_matrix(rng, m, n);
        for (const Subset& s : SubsetIndexer::shared(n, m).subsets()) ASSERT_EQ(maximal_minor(mat, s), fixtures::laplace_minor(mat, s));
      }
}

TEST(Minors, ColumnSwapNegates) {
  SplitMix64 rng(8);
  const RationalMatrix mat = fixtures::random_rational_matrix(rng, 3, 5);
  const RationalMatrix swapped = mat.select_columns({1, 0, 2, 3, 4});
  EXPECT_EQ(maximal_minor(swapped, {1, 2, 3}), -maximal_minor(mat, {1, 2, 3}));
}

TEST(Minors, BigEntriesStayExact) {
  const std::string big = "1000000000000000000000";
  const RationalMatrix m = parse_matrix(R"({"m":2,"n":2,"entries":[[")" + big + R"(","1"],["1",")" + big + R"("]]})");
  EXPECT_EQ(determinant(m).to_string(), "999999999999999999999999999999999999999999");
}

TEST(Minors, ContractViolations) {
  const RationalMatrix m = small_example();
  EXPECT_THROW(maximal_minor(m, {1}), ContractViolation);
  EXPECT_THROW(maximal_minor(m, {1, 4}), ContractViolation);
  EXPECT_THROW(maximal_minor(m, {2, 1}), ContractViolation);
  EXPECT_THROW(RationalMatrix(3, 2), ContractViolation);
}

TEST(Genericity, Examples) {
  EXPECT_TRUE(is_totally_nonzero(small_example()));
  const RationalMatrix degenerate = parse_matrix(R"({"m":2,"n":3,"entries":[["1","0","1"],["0","1","0"]]})");
  EXPECT_FALSE(is_totally_nonzero(degenerate));
  EXPECT_EQ(first_zero_minor(degenerate), (Subset{1, 3}));
  EXPECT_TRUE(is_totally_nonzero(parse_matrix(R"({"m":2,"n":2,"entries":[["1","0"],["0","1"]]})")));
}
