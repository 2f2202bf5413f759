#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tnz/tnz.hpp"

// Reproduction checks shared by the `verify` subcommand and the acceptance test binary.
// Every tolerance is exact: counts must match, mismatch tallies must be zero.

namespace tnz::acceptance {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

/// Random totally nonzero integer m x n matrix with entries in [-bound, bound].
inline RationalMatrix random_generic(SplitMix64& rng, int m, int n, std::int64_t bound = 50) {
  for (;;) {
    std::vector<std::int64_t> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (auto& e : entries) e = rng.uniform(-bound, bound);
    if (integer_sign_vector(m, n, entries)) return integer_matrix(m, n, entries);
  }
}

inline PlainPerm random_perm(SplitMix64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(rng.uniform(0, i))]);
  return PlainPerm(std::move(images));
}

inline SignedPerm random_signed_perm(SplitMix64& rng, int n) {
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (auto& s : signs) s = rng.uniform(0, 1) ? -1 : 1;
  return SignedPerm::from_parts(random_perm(rng, n), ReflectionVector(std::move(signs)));
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

}  // namespace detail

inline CheckResult strata_count() {
  CheckResult r{1, "strata count m=2, n=2..8", true, ""};
  std::vector<std::uint64_t> got;
  double seconds_n8 = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto strata = enumerate_strata_2d(n);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 8) seconds_n8 = secs;
    got.push_back(strata.size());
    if (strata.size() != count_strata_2d(n)) r.passed = false;
  }
  const std::vector<std::uint64_t> expected{1, 4, 24, 192, 1920, 23040, 322560};
  if (got != expected) r.passed = false;
  if (seconds_n8 >= 60.0) r.passed = false;
  std::ostringstream os;
  os << "sizes " << detail::join(got) << "; n=8 took " << seconds_n8 << " s (limit 60)";
  r.detail = os.str();
  return r;
}

inline CheckResult orientation_matrix_count() {
  CheckResult r{2, "orientation matrices = 2^{n-1}(n-1)!, n=2..7", true, ""};
  std::vector<std::uint64_t> got;
  for (int n = 2; n <= 7; ++n) {
    std::set<OrientationSignMatrix> distinct;
    for (const SignedPerm& p : coset_reps(n)) distinct.insert(conjugate_standard(p));
    got.push_back(distinct.size());
    if (distinct.size() != count_orientation_matrices(n)) r.passed = false;
  }
  r.detail = "distinct conjugates " + detail::join(got);
  return r;
}

inline CheckResult fixed_point_theorem() {
  CheckResult r{3, "zeta fixed points closed form = brute force, n<=12", true, ""};
  int checked = 0, mismatches = 0;
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i < 2 * n; ++i, ++checked)
      if (fixed_point_count(n, i) != fixed_point_count_bruteforce(n, i)) ++mismatches;
  r.passed = mismatches == 0;
  r.detail = std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " mismatches";
  return r;
}

inline CheckResult orbit_counts() {
  CheckResult r{4, "S_n orbits: closed form = Burnside = orbit BFS (n=2..8); sequence n=2..10", true, ""};
  std::vector<std::uint64_t> closed, burnside, bfs;
  for (int n = 2; n <= 8; ++n) {
    closed.push_back(count_generic_orbits_closed_form(n));
    burnside.push_back(count_generic_orbits_burnside(n));
    bfs.push_back(orbit_partition(enumerate_strata_2d(n), GroupTag::symmetric, n).orbit_count);
  }
  std::vector<std::uint64_t> sequence;
  for (int n = 2; n <= 10; ++n) sequence.push_back(count_generic_orbits_closed_form(n));
  const std::vector<std::uint64_t> expected_sequence{1, 2, 2, 4, 6, 10, 16, 30, 52};
  const bool closed_eq_burnside = closed == burnside;
  const bool sequence_ok = sequence == expected_sequence;
  const bool bfs_ok = bfs == closed;
  r.passed = closed_eq_burnside && sequence_ok && bfs_ok;
  std::ostringstream os;
  os << "closed " << detail::join(closed) << " | burnside " << detail::join(burnside) << " | bfs " << detail::join(bfs)
     << " | sequence " << detail::join(sequence) << (sequence_ok ? " ok" : " WRONG");
  if (!bfs_ok) {
    os << " | BFS differs at n=";
    std::vector<int> bad;
    for (std::size_t k = 0; k < bfs.size(); ++k)
      if (bfs[k] != closed[k]) bad.push_back(static_cast<int>(k) + 2);
    os << detail::join(bad);
  }
  r.detail = os.str();
  return r;
}

inline CheckResult transitivity() {
  CheckResult r{5, "hyperoctahedral action transitive, n=2..8", true, ""};
  std::vector<std::uint64_t> counts;
  for (int n = 2; n <= 8; ++n) {
    counts.push_back(orbit_partition(enumerate_strata_2d(n), GroupTag::hyperoctahedral, n).orbit_count);
    if (counts.back() != 1) r.passed = false;
  }
  r.detail = "orbit counts " + detail::join(counts);
  return r;
}

inline CheckResult sign_lemma(std::uint64_t seed = 6) {
  CheckResult r{6, "sign lemma on 1000 random 2 x n witnesses per n=2..8", true, ""};
  SplitMix64 rng(seed);
  std::uint64_t pairs = 0, violations = 0;
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 1000; ++trial) {
      const RationalMatrix mat = detail::random_generic(rng, 2, n);
      const std::vector<int> order = angular_order(mat);
      const CombinatorialRep rep = combinatorial_rep(mat);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const int ci = order[static_cast<std::size_t>(i - 1)], cj = order[static_cast<std::size_t>(j - 1)];
          const int det = (mat(0, ci) * mat(1, cj) - mat(1, ci) * mat(0, cj)).sign();
          const int ai = rep(ci + 1), aj = rep(cj + 1);
          const int predicted = (ai > 0 ? 1 : -1) * (aj > 0 ? 1 : -1) * (j > i ? 1 : -1);
          ++pairs;
          if (std::abs(ai) != i || det != predicted) ++violations;
        }
    }
  r.passed = violations == 0;
  r.detail = std::to_string(pairs) + " ordered pairs, " + std::to_string(violations) + " violations";
  return r;
}

inline CheckResult action_agreement(std::uint64_t seed = 7) {
  CheckResult r{7, "combinatorial actions = matrix recomputation, m in {2,3}, n<=7", true, ""};
  SplitMix64 rng(seed);
  std::uint64_t witnesses = 0, mismatches = 0;
  for (int m = 2; m <= 3; ++m)
    for (int n = m; n <= 7; ++n)
      for (int trial = 0; trial < 1000; ++trial, ++witnesses) {
        const RationalMatrix mat = detail::random_generic(rng, m, n);
        const SignVector s = sign_vector(mat);
        const PlainPerm sigma = detail::random_perm(rng, n);
        const SignedPerm p = detail::random_signed_perm(rng, n);
        // S_n: columns permuted, signs recomputed from the matrix
        const RationalMatrix permuted = transform_columns(mat, SignedPerm::from_parts(sigma, ReflectionVector::identity(n)));
        if (act_perm_on_sign_vector(sigma, s) != sign_vector(permuted)) ++mismatches;
        // hyperoctahedral: columns scaled by signs and permuted, compared on strata
        const RationalMatrix moved = transform_columns(mat, p);
        if (act_signed_perm_on_stratum(p, canonicalize(s)) != canonicalize(sign_vector(moved))) ++mismatches;
      }
  r.passed = mismatches == 0;
  r.detail = std::to_string(witnesses) + " witnesses, " + std::to_string(mismatches) + " mismatches";
  return r;
}

inline CheckResult three_term_exactness() {
  CheckResult r{8, "three-term feasible canonical vectors at (2,4) = 24", true, ""};
  int feasible_all = 0, feasible_canonical = 0, canonical = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    SignVector s(4, 2);
    for (std::uint64_t k = 0; k < 6; ++k)
      if ((mask >> k) & 1U) s.set(k, -1);
    const bool ok = three_term_feasible(s);
    feasible_all += ok;
    if (!s.negative(0)) {
      ++canonical;
      feasible_canonical += ok;
    }
  }
  r.passed = canonical == 32 && feasible_canonical == 24 && feasible_all == 48 &&
             static_cast<std::uint64_t>(feasible_canonical) == enumerate_strata_2d(4).size();
  r.detail = std::to_string(feasible_canonical) + " of " + std::to_string(canonical) + " canonical (" + std::to_string(feasible_all) + " of 64 raw)";
  return r;
}

inline CheckResult explorer_consistency(std::uint64_t seed = 42) {
  CheckResult r{9, "explorer: m=2 full recovery n<=5; m=3 hyper orbits 1 (n=3,4,5), >=2 (n=6)", true, ""};
  std::ostringstream os;
  for (int n = 2; n <= 5; ++n) {
    StrataStore store(2, n);
    explore(SampleConfig{2, n, 50, 100000, seed}, store);
    const auto expected = enumerate_strata_2d(n);
    const bool same = store.strata() == expected;
    if (!same) r.passed = false;
    os << "m=2 n=" << n << ": " << store.found.size() << "/" << expected.size() << (same ? "" : " MISMATCH") << "; ";
  }
  for (int n = 3; n <= 6; ++n) {
    const std::uint64_t budget = n == 6 ? 1000000 : 100000;
    StrataStore store(3, n);
    explore(SampleConfig{3, n, 50, budget, seed}, store);
    const auto report = classify_found(store, GroupTag::hyperoctahedral);
    const bool ok = n == 6 ? report.orbit_count >= 2 : report.orbit_count == 1;
    if (!ok || !validate_store(store).empty()) r.passed = false;
    os << "m=3 n=" << n << ": " << store.found.size() << " strata, " << report.orbit_count << " orbit(s)" << (n == 6 ? " (lower bound)" : "") << "; ";
  }
  r.detail = os.str();
  return r;
}

inline CheckResult determinism(std::uint64_t seed = 42) {
  CheckResult r{10, "explorer determinism: identical config -> byte-identical store", true, ""};
  const SampleConfig cfg{3, 6, 50, 20000, seed};
  StrataStore first(3, 6), second(3, 6);
  explore(cfg, first);
  explore(cfg, second, 1);
  const std::string a = store_to_json(first), b = store_to_json(second);
  const std::string reparsed = store_to_json(store_from_json(a));
  r.passed = a == b && a == reparsed;
  r.detail = std::to_string(a.size()) + " bytes, " + std::to_string(first.found.size()) + " strata; runs " + (a == b ? "identical" : "DIFFER") +
             ", round-trip " + (a == reparsed ? "identical" : "DIFFERS");
  return r;
}

struct Criterion {
  int id;
  std::function<CheckResult()> run;
};

inline std::vector<Criterion> all_criteria() {
  return {{1, [] { return strata_count(); }},         {2, [] { return orientation_matrix_count(); }},
          {3, [] { return fixed_point_theorem(); }},  {4, [] { return orbit_counts(); }},
          {5, [] { return transitivity(); }},         {6, [] { return sign_lemma(); }},
          {7, [] { return action_agreement(); }},     {8, [] { return three_term_exactness(); }},
          {9, [] { return explorer_consistency(); }}, {10, [] { return determinism(); }}};
}

}  // namespace tnz::acceptance
