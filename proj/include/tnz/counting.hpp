#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tnz/actions.hpp"
#include "tnz/errors.hpp"
#include "tnz/sign_vector.hpp"
#include "tnz/signed_perm.hpp"

namespace tnz {

// ---- zeta action on {+1,-1}^n: (d_1, ..., d_n) -> (-d_n, d_1, ..., d_{n-1}) ----

using ZetaState = std::vector<int>;

inline ZetaState zeta_apply(std::uint64_t times, ZetaState d) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  times %= 2 * n;  // zeta has order 2n
  for (std::uint64_t t = 0; t < times; ++t) {
    const int last = d.back();
    for (std::size_t k = n - 1; k > 0; --k) d[k] = d[k - 1];
    d[0] = -last;
  }
  return d;
}

inline std::uint64_t pow2(int e) {
  if (e < 0 || e > 63) throw ContractViolation("2^" + std::to_string(e) + " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

/// Number of d in {+1,-1}^n fixed by zeta^i, 0 <= i < 2n. With n = 2^l * odd:
/// 2^n for i = 0, 2^gcd(i, n) when i is a nonzero multiple of 2^{l+1}, else 0.
inline std::uint64_t fixed_point_count(int n, int i) {
  if (n < 1) throw ContractViolation("fixed_point_count needs n >= 1");
  if (i < 0 || i >= 2 * n) throw ContractViolation("i must lie in [0, 2n)");
  if (i == 0) return pow2(n);
  int l = 0;
  while ((n >> l) % 2 == 0) ++l;
  const int step = 1 << (l + 1);
  if (i % step == 0) return pow2(std::gcd(i, n));
  return 0;
}

constexpr int kMaxBruteForceZetaN = 20;

/// Exhaustive scan over all 2^n states.
inline std::uint64_t fixed_point_count_bruteforce(int n, int i, bool allow_large = false) {
  if (n < 1) throw ContractViolation("fixed_point_count_bruteforce needs n >= 1");
  if (n > kMaxBruteForceZetaN && !allow_large) throw ContractViolation("brute force scan limited to n <= 20");
  if (i < 0 || i >= 2 * n) throw ContractViolation("i must lie in [0, 2n)");
  std::uint64_t count = 0;
  ZetaState d(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < pow2(n); ++mask) {
    for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = (mask >> k) & 1U ? -1 : 1;
    if (zeta_apply(static_cast<std::uint64_t>(i), d) == d) ++count;
  }
  return count;
}

/// Euler's totient by trial division.
inline std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

/// 2^{n-2} (n-1)!
inline std::uint64_t count_strata_2d(int n) {
  if (n < 2 || n > 20) throw ContractViolation("count_strata_2d supports 2 <= n <= 20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n - 1; ++k) f *= static_cast<std::uint64_t>(k);
  return pow2(n - 2) * f;
}

/// 2^{n-1} (n-1)!, the number of orientation sign matrices.
inline std::uint64_t count_orientation_matrices(int n) { return 2 * count_strata_2d(n); }

/// (1/2n) * sum over odd divisors k of n of phi(k) 2^{n/k}.
inline std::uint64_t count_generic_orbits_closed_form(int n) {
  if (n < 2 || n > 62) throw ContractViolation("count_generic_orbits_closed_form supports 2 <= n <= 62");
  std::uint64_t sum = 0;
  for (int k = 1; k <= n; k += 2)
    if (n % k == 0) sum += euler_phi(static_cast<std::uint64_t>(k)) * pow2(n / k);
  return sum / (2 * static_cast<std::uint64_t>(n));
}

/// (1/2n) * sum_{i=0}^{2n-1} fixed_point_count(n, i). Throws std::logic_error when the
/// sum is not divisible by 2n, which can only mean an implementation bug.
inline std::uint64_t count_generic_orbits_burnside(int n) {
  if (n < 2 || n > 62) throw ContractViolation("count_generic_orbits_burnside supports 2 <= n <= 62");
  std::uint64_t sum = 0;
  for (int i = 0; i < 2 * n; ++i) sum += fixed_point_count(n, i);
  if (sum % (2 * static_cast<std::uint64_t>(n)) != 0)
    throw std::logic_error("Burnside sum " + std::to_string(sum) + " not divisible by " + std::to_string(2 * n));
  return sum / (2 * static_cast<std::uint64_t>(n));
}

// ---- orbit partitions ----

enum class GroupTag { symmetric, hyperoctahedral };

inline std::string to_string(GroupTag g) { return g == GroupTag::symmetric ? "sn" : "hyper"; }

inline GroupTag parse_group(std::string_view text) {
  if (text == "sn" || text == "S_n" || text == "symmetric") return GroupTag::symmetric;
  if (text == "hyper" || text == "hyperoctahedral") return GroupTag::hyperoctahedral;
  throw ParseError("unknown group '" + std::string(text) + "' (expected sn or hyper)");
}

/// Order of the acting group: n! or 2^n n!.
inline std::uint64_t group_order(GroupTag g, int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return g == GroupTag::symmetric ? f : f * pow2(n);
}

struct OrbitReport {
  GroupTag group = GroupTag::symmetric;
  int n = 0;
  int m = 0;
  std::uint64_t orbit_count = 0;
  std::vector<std::uint64_t> orbit_sizes;   // full orbit sizes, in order of discovery
  std::vector<std::uint64_t> input_hits;    // how many input strata fell in each orbit
  std::vector<Stratum> representatives;     // first input stratum of each orbit
  std::uint64_t strata_processed = 0;       // sum of orbit_sizes
};

/// Generators used for orbit closure: adjacent transpositions, plus every
/// single-coordinate reflection for the hyperoctahedral group.
inline std::vector<SignVectorTransform> orbit_generators(GroupTag group, int n, int m) {
  std::vector<SignVectorTransform> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(n, m, PlainPerm::transposition(n, i, i + 1), ReflectionVector::identity(n));
  if (group == GroupTag::hyperoctahedral)
    for (int i = 1; i <= n; ++i) {
      std::vector<int> d(static_cast<std::size_t>(n), 1);
      d[static_cast<std::size_t>(i - 1)] = -1;
      gens.emplace_back(n, m, PlainPerm::identity(n), ReflectionVector(std::move(d)));
    }
  return gens;
}

/// Breadth-first orbit closure of every input stratum. Orbits are closed in full,
/// including strata that are not part of the input, so distinct orbits are
/// genuinely distinct even when the input is only a sample.
inline OrbitReport orbit_partition(std::span<const Stratum> strata, GroupTag group, int n) {
  OrbitReport report;
  report.group = group;
  report.n = n;
  if (strata.empty()) return report;
  const int m = strata.front().m();
  report.m = m;
  for (const Stratum& s : strata)
    if (s.n() != n || s.m() != m) throw ContractViolation("stratum size mismatch in orbit partition");

  const auto gens = orbit_generators(group, n, m);
  std::unordered_map<Stratum, std::size_t> orbit_of;
  std::deque<Stratum> frontier;
  for (const Stratum& seed : strata) {
    auto found = orbit_of.find(seed);
    if (found != orbit_of.end()) {
      ++report.input_hits[found->second];
      continue;
    }
    const std::size_t id = report.orbit_sizes.size();
    report.orbit_sizes.push_back(0);
    report.input_hits.push_back(1);
    report.representatives.push_back(seed);
    orbit_of.emplace(seed, id);
    frontier.push_back(seed);
    while (!frontier.empty()) {
      Stratum current = std::move(frontier.front());
      frontier.pop_front();
      ++report.orbit_sizes[id];
      for (const auto& g : gens) {
        Stratum next = g.apply(current);
        if (orbit_of.emplace(next, id).second) frontier.push_back(std::move(next));
      }
    }
  }
  report.orbit_count = report.orbit_sizes.size();
  report.strata_processed = std::accumulate(report.orbit_sizes.begin(), report.orbit_sizes.end(), std::uint64_t{0});
  return report;
}

}  // namespace tnz
