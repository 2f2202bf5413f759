#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>

#include "helpers.hpp"

using namespace tnz;

namespace {

std::uint64_t encode(const ZetaState& d) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] < 0) mask |= std::uint64_t{1} << k;
  return mask;
}

/// Orbits on {+1,-1}^n under zeta, optionally also under d -> (-d_n, ..., -d_1).
std::uint64_t zeta_orbits(int n, bool with_reversal) {
  std::set<std::uint64_t> seen;
  std::uint64_t orbits = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (seen.contains(mask)) continue;
    ++orbits;
    std::deque<ZetaState> todo;
    ZetaState d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = (mask >> k) & 1U ? -1 : 1;
    seen.insert(mask);
    todo.push_back(d);
    while (!todo.empty()) {
      const ZetaState cur = todo.front();
      todo.pop_front();
      std::vector<ZetaState> next{zeta_apply(1, cur)};
      if (with_reversal) {
        ZetaState r(cur.rbegin(), cur.rend());
        for (auto& x : r) x = -x;
        next.push_back(r);
      }
      for (auto& x : next)
        if (seen.insert(encode(x)).second) todo.push_back(x);
    }
  }
  return orbits;
}

}  // namespace

TEST(Zeta, Examples) {
  const ZetaState plus{1, 1, 1};
  EXPECT_EQ(zeta_apply(0, plus), plus);
  EXPECT_EQ(zeta_apply(1, plus), (ZetaState{-1, 1, 1}));
  EXPECT_EQ(zeta_apply(6, ZetaState{1, -1, 1}), (ZetaState{1, -1, 1}));
  EXPECT_EQ(zeta_apply(3, plus), (ZetaState{-1, -1, -1}));
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_point_count(3, 0), 8U);
  EXPECT_EQ(fixed_point_count(3, 2), 2U);
  for (int i : {1, 3, 5}) EXPECT_EQ(fixed_point_count(3, i), 0U);
  EXPECT_EQ(fixed_point_count(4, 4), 0U);
  EXPECT_EQ(fixed_point_count_bruteforce(4, 4), 0U);
  EXPECT_EQ(fixed_point_count(4, 0), 16U);
  EXPECT_THROW(fixed_point_count(4, 8), ContractViolation);
  EXPECT_THROW(fixed_point_count(4, -1), ContractViolation);
  EXPECT_THROW(fixed_point_count_bruteforce(21, 0), ContractViolation);
}

TEST(FixedPoints, ClosedFormMatchesScan) {
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i < 2 * n; ++i) ASSERT_EQ(fixed_point_count(n, i), fixed_point_count_bruteforce(n, i)) << n << " " << i;
}

TEST(Totient, Values) {
  const std::vector<std::uint64_t> expected{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (std::uint64_t k = 1; k <= 12; ++k) EXPECT_EQ(euler_phi(k), expected[k - 1]);
  EXPECT_EQ(euler_phi(97), 96U);
}

TEST(Counts, StrataFormula) {
  EXPECT_EQ(count_strata_2d(2), 1U);
  EXPECT_EQ(count_strata_2d(4), 24U);
  EXPECT_EQ(count_orientation_matrices(4), 48U);
}

TEST(Counts, KnownSequence) {
  const std::vector<std::uint64_t> expected{1, 2, 2, 4, 6, 10, 16, 30, 52};
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(count_generic_orbits_closed_form(n), expected[static_cast<std::size_t>(n - 2)]) << n;
}

TEST(Counts, BurnsideAgreesWithClosedForm) {
  EXPECT_EQ(count_generic_orbits_burnside(3), 2U);
  EXPECT_EQ(count_generic_orbits_burnside(5), 4U);
  for (int n = 2; n <= 16; ++n) EXPECT_EQ(count_generic_orbits_burnside(n), count_generic_orbits_closed_form(n));
}

TEST(Counts, BurnsideIsTheZetaOrbitCount) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(zeta_orbits(n, false), count_generic_orbits_burnside(n));
}

// The totient count equals the number of S_n-conjugacy classes of orientation matrices.
TEST(Counts, ClosedFormCountsOrientationMatrixClasses) {
  for (int n = 2; n <= 7; ++n) {
    std::set<OrientationSignMatrix> all;
    for (const auto& p : coset_reps(n)) all.insert(conjugate_standard(p));
    std::set<OrientationSignMatrix> seen;
    std::uint64_t classes = 0;
    for (const auto& start : all) {
      if (seen.contains(start)) continue;
      ++classes;
      std::deque<OrientationSignMatrix> todo{start};
      seen.insert(start);
      while (!todo.empty()) {
        const auto cur = todo.front();
        todo.pop_front();
        for (int i = 1; i < n; ++i) {
          OrientationSignMatrix next(n);
          auto swap_index = [i](int k) { return k == i ? i + 1 : (k == i + 1 ? i : k); };
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) next.set(swap_index(a), swap_index(b), cur(a, b));
          if (seen.insert(next).second) todo.push_back(next);
        }
      }
    }
    EXPECT_EQ(classes, count_generic_orbits_closed_form(n)) << n;
  }
}

// Strata identify O with -O, which for m = 2 adds the reversal to the zeta model.
TEST(OrbitPartition, StrataOrbitsMatchReversalModel) {
  const std::vector<std::uint64_t> expected{1, 2, 2, 4, 5, 9, 12};
  for (int n = 2; n <= 8; ++n) {
    const auto report = orbit_partition(enumerate_strata_2d(n), GroupTag::symmetric, n);
    EXPECT_EQ(report.orbit_count, zeta_orbits(n, true)) << n;
    EXPECT_EQ(report.orbit_count, expected[static_cast<std::size_t>(n - 2)]) << n;
    if (n <= 5) EXPECT_EQ(report.orbit_count, count_generic_orbits_closed_form(n));
  }
}

TEST(OrbitPartition, SizesDivideGroupOrderAndSumToTotal) {
  for (int n = 2; n <= 7; ++n)
    for (GroupTag g : {GroupTag::symmetric, GroupTag::hyperoctahedral}) {
      const auto strata = enumerate_strata_2d(n);
      const auto report = orbit_partition(strata, g, n);
      EXPECT_EQ(report.strata_processed, strata.size());
      std::uint64_t hits = 0;
      for (std::size_t k = 0; k < report.orbit_sizes.size(); ++k) {
        EXPECT_EQ(group_order(g, n) % report.orbit_sizes[k], 0U);
        EXPECT_EQ(report.input_hits[k], report.orbit_sizes[k]);
        hits += report.input_hits[k];
      }
      EXPECT_EQ(hits, strata.size());
    }
}

TEST(OrbitPartition, HyperoctahedralIsTransitive) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(orbit_partition(enumerate_strata_2d(n), GroupTag::hyperoctahedral, n).orbit_count, 1U) << n;
}

TEST(OrbitPartition, SingletonInput) {
  const std::vector<Stratum> one{canonicalize(SignVector(4, 2))};
  const auto sn = orbit_partition(one, GroupTag::symmetric, 4);
  EXPECT_EQ(sn.orbit_count, 1U);
  EXPECT_EQ(sn.input_hits, (std::vector<std::uint64_t>{1}));
  const auto hyper = orbit_partition(one, GroupTag::hyperoctahedral, 4);
  EXPECT_EQ(hyper.orbit_sizes, (std::vector<std::uint64_t>{24}));
  const std::vector<Stratum> trivial{canonicalize(SignVector(2, 2))};
  EXPECT_EQ(orbit_partition(trivial, GroupTag::hyperoctahedral, 2).orbit_sizes, (std::vector<std::uint64_t>{1}));
}

TEST(OrbitPartition, SizeMismatchRejected) {
  const std::vector<Stratum> mixed{canonicalize(SignVector(4, 2)), canonicalize(SignVector(5, 2))};
  EXPECT_THROW(orbit_partition(mixed, GroupTag::symmetric, 4), ContractViolation);
}

TEST(Groups, ParseAndOrder) {
  EXPECT_EQ(parse_group("sn"), GroupTag::symmetric);
  EXPECT_EQ(parse_group("hyper"), GroupTag::hyperoctahedral);
  EXPECT_THROW(parse_group("dihedral"), ParseError);
  EXPECT_EQ(group_order(GroupTag::symmetric, 4), 24U);
  EXPECT_EQ(group_order(GroupTag::hyperoctahedral, 3), 48U);
}
