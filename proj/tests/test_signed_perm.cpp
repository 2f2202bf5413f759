#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace tnz;

namespace {

SignedPerm sp(const char* text) { return SignedPerm::parse(text); }

std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<SignedPerm> out;
  for_each_signed_perm(n, [&](const SignedPerm& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST(SignedPerm, TextForm) {
  EXPECT_EQ(sp("-3,1,2").to_string(), "-3,1,2");
  EXPECT_EQ(sp(" 1, -2 ").to_string(), "1,-2");
  EXPECT_THROW(sp("1,1"), std::exception);
  EXPECT_THROW(sp("1,3"), std::exception);
  EXPECT_THROW(sp("0,1"), std::exception);
  EXPECT_THROW(sp("1,,2"), ParseError);
  EXPECT_THROW(sp(""), ParseError);
}

TEST(SignedPerm, ComposeExamples) {
  EXPECT_EQ(compose(sp("-3,1,2"), SignedPerm::identity(3)), sp("-3,1,2"));
  EXPECT_EQ(compose(sp("-2,1"), sp("-2,1")), sp("-1,-2"));
}

TEST(SignedPerm, ComposeIsMatrixProduct) {
  SplitMix64 rng(2);
  const auto all = all_signed_perms(4);
  for (int t = 0; t < 200; ++t) {
    const SignedPerm& p = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    const SignedPerm& q = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    const auto a = p.matrix(), b = q.matrix(), c = compose(p, q).matrix();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int sum = 0;
        for (int k = 0; k < 4; ++k) sum += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        ASSERT_EQ(sum, c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
  }
}

TEST(SignedPerm, GroupAxioms) {
  const auto all = all_signed_perms(3);
  ASSERT_EQ(all.size(), 48U);
  const SignedPerm e = SignedPerm::identity(3);
  for (const auto& p : all) {
    EXPECT_EQ(compose(p, p.inverse()), e);
    EXPECT_EQ(compose(p.inverse(), p), e);
    EXPECT_EQ(compose(e, p), p);
    for (const auto& q : all)
      for (const auto& r : all) ASSERT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
  }
}

TEST(SignedPerm, PartsRoundTrip) {
  for (const auto& p : all_signed_perms(4)) EXPECT_EQ(SignedPerm::from_parts(p.permutation(), p.reflection()), p);
}

TEST(Kn, GeneratorAndOrder) {
  EXPECT_EQ(kn_generator(2), sp("-2,1"));
  EXPECT_EQ(kn_generator(3), sp("-3,1,2"));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(cyclic_closure(kn_generator(n)).size(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(KnSubgroup(n).size(), static_cast<std::size_t>(2 * n));
  }
}

TEST(CosetReps, SizesAndSmallCase) {
  EXPECT_EQ(coset_reps(2), (std::vector<SignedPerm>{sp("1,2"), sp("1,-2")}));
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(coset_reps(n).size(), count_orientation_matrices(n));
}

TEST(CosetReps, PairwiseDistinctCosets) {
  for (int n = 2; n <= 6; ++n) {
    const KnSubgroup kn(n);
    const auto reps = coset_reps(n);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) ASSERT_FALSE(kn.contains(compose(reps[a].inverse(), reps[b]))) << n;
  }
}

TEST(CosetReps, CoverTheWholeGroup) {
  for (int n = 2; n <= 5; ++n) {
    const auto kn = cyclic_closure(kn_generator(n));
    std::set<SignedPerm> left, right;
    for (const auto& r : coset_reps(n))
      for (const auto& k : kn) {
        left.insert(compose(r, k));
        right.insert(compose(k, r));
      }
    EXPECT_EQ(left.size(), group_order(GroupTag::hyperoctahedral, n));
    EXPECT_EQ(right.size(), group_order(GroupTag::hyperoctahedral, n));
  }
}

TEST(PlainPerm, CompositionAndInverse) {
  const PlainPerm s({2, 3, 1});
  EXPECT_EQ(s * s.inverse(), PlainPerm::identity(3));
  EXPECT_EQ((s * s)(1), 3);
  EXPECT_EQ(PlainPerm::transposition(4, 2, 3)(2), 3);
  EXPECT_THROW(PlainPerm({1, 1}), ContractViolation);
}

TEST(Reflection, SemidirectRelation) {
  // sigma d sigma^{-1} is the reflection d permuted by sigma
  const auto all = all_signed_perms(3);
  for (const auto& p : all) {
    const SignedPerm sigma = SignedPerm::from_parts(p.permutation(), ReflectionVector::identity(3));
    const SignedPerm d = SignedPerm::from_parts(PlainPerm::identity(3), p.reflection());
    const SignedPerm conj = compose(compose(sigma, d), sigma.inverse());
    EXPECT_EQ(conj.permutation(), PlainPerm::identity(3));
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(conj.reflection()(p.permutation()(i)), p.reflection()(i));
  }
}
