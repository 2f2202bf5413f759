#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "tnz/counting.hpp"
#include "tnz/errors.hpp"
#include "tnz/matrix.hpp"
#include "tnz/sign_vector.hpp"
#include "tnz/subsets.hpp"

// Randomized witness search for strata when no closed form is known (m >= 3).
// Every count produced here is a lower bound.

namespace tnz {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then the
/// output is the state passed through the 64-bit finalizer below. Fully specified,
/// so streams are identical on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform integer in [lo, hi] by rejection sampling (no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = range == 0 ? 0 : UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return lo + static_cast<std::int64_t>(x % range);
  }

private:
  std::uint64_t state_;
};

struct SampleConfig {
  int m = 2;
  int n = 4;
  std::int64_t entry_bound = 50;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;

  void validate() const {
    if (m < 1 || n < m) throw ContractViolation("sample config needs n >= m >= 1");
    if (entry_bound < 1) throw ContractViolation("entry bound must be at least 1");
    if (samples < 1) throw ContractViolation("sample budget must be at least 1");
  }
};

/// Generator for sample k of a run: SplitMix64 started at mix(seed) ^ mix(k + 1).
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t k) {
  return SplitMix64(SplitMix64::mix(seed) ^ SplitMix64::mix(k + 1));
}

/// Row-major integer entries of sample k, each uniform in [-B, B].
inline std::vector<std::int64_t> sample_entries(const SampleConfig& cfg, std::uint64_t k) {
  SplitMix64 rng = sample_stream(cfg.seed, k);
  std::vector<std::int64_t> entries(static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.n));
  for (auto& e : entries) e = rng.uniform(-cfg.entry_bound, cfg.entry_bound);
  return entries;
}

inline RationalMatrix integer_matrix(int m, int n, const std::vector<std::int64_t>& entries) {
  RationalMatrix out(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = Rational(entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]);
  return out;
}

/// Sign vector of an integer matrix, or nullopt when some maximal minor vanishes.
/// Uses 128-bit Bareiss when the squared Hadamard bound fits, BigInt otherwise.
inline std::optional<SignVector> integer_sign_vector(int m, int n, const std::vector<std::int64_t>& entries) {
  std::int64_t max_abs = 0;
  for (auto e : entries) max_abs = std::max<std::int64_t>(max_abs, e < 0 ? -e : e);
  const double hadamard_log2 = max_abs == 0 ? 0.0 : m * (std::log2(static_cast<double>(max_abs)) + 0.5 * std::log2(static_cast<double>(m)));
  const bool narrow = 2.0 * hadamard_log2 < 120.0;

  const SubsetIndexer& idx = SubsetIndexer::shared(n, m);
  SignVector out(n, m);
  const auto k = static_cast<std::size_t>(m);
  std::vector<__int128> small(k * k);
  std::vector<BigInt> big;
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    const Subset& cols = idx.unrank(r);
    int sign = 0;
    if (narrow) {
      for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j < k; ++j)
          small[row * k + j] = entries[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(cols[j] - 1)];
      const __int128 det = bareiss_determinant(small, k);
      sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    } else {
      big.assign(k * k, BigInt(0));
      for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j < k; ++j)
          big[row * k + j] = entries[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(cols[j] - 1)];
      sign = bareiss_determinant(big, k).sign();
    }
    if (sign == 0) return std::nullopt;
    out.set(r, sign);
  }
  return out;
}

/// Sample k as a matrix, or nullopt if it is not totally nonzero (the caller moves on to k + 1).
inline std::optional<RationalMatrix> sample_generic_matrix(const SampleConfig& cfg, std::uint64_t k) {
  cfg.validate();
  auto entries = sample_entries(cfg, k);
  if (!integer_sign_vector(cfg.m, cfg.n, entries)) return std::nullopt;
  return integer_matrix(cfg.m, cfg.n, entries);
}

struct StoreEntry {
  RationalMatrix witness;
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
};

/// Discovered strata keyed by canonical sign string, one witness each (first found).
struct StrataStore {
  int m = 0;
  int n = 0;
  std::map<std::string, StoreEntry> found;

  StrataStore(int m_, int n_) : m(m_), n(n_) {}

  std::vector<Stratum> strata() const {
    std::vector<Stratum> out;
    out.reserve(found.size());
    for (const auto& [key, entry] : found) out.push_back(canonicalize(SignVector::parse(key, n, m)));
    return out;
  }
};

struct ExploreStats {
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t new_strata = 0;
  std::uint64_t already_seen = 0;
};

/// TNZ_THREADS if set and positive, else the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("TNZ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs samples 0 .. cfg.samples-1 and inserts unseen strata. Index ranges are split
/// across threads and merged by smallest sample index, so the result depends only on cfg.
inline ExploreStats explore(const SampleConfig& cfg, StrataStore& store, unsigned threads = default_thread_count()) {
  cfg.validate();
  if (store.m != cfg.m || store.n != cfg.n) throw ContractViolation("store dimensions do not match the sample config");
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(cfg.samples, 256))));

  struct Local {
    std::unordered_map<SignVector, std::uint64_t> first;  // canonical vector -> smallest sample index
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
  };
  std::vector<Local> locals(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t begin = cfg.samples * t / threads;
    const std::uint64_t end = cfg.samples * (t + 1) / threads;
    Local& local = locals[t];
    for (std::uint64_t k = begin; k < end; ++k) {
      auto signs = integer_sign_vector(cfg.m, cfg.n, sample_entries(cfg, k));
      if (!signs) {
        ++local.rejected;
        continue;
      }
      ++local.accepted;
      local.first.try_emplace(canonicalize(std::move(*signs)).canonical(), k);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::unordered_map<SignVector, std::uint64_t> merged;
  ExploreStats stats;
  for (const Local& local : locals) {
    stats.accepted += local.accepted;
    stats.rejected += local.rejected;
    for (const auto& [key, k] : local.first) {
      auto [it, inserted] = merged.try_emplace(key, k);
      if (!inserted) it->second = std::min(it->second, k);
    }
  }
  for (const auto& [key, k] : merged) {
    std::string text = key.to_string();
    if (store.found.contains(text)) continue;
    store.found.emplace(std::move(text), StoreEntry{integer_matrix(cfg.m, cfg.n, sample_entries(cfg, k)), cfg.seed, k});
    ++stats.new_strata;
  }
  stats.already_seen = stats.accepted - stats.new_strata;
  return stats;
}

/// Orbit partition of the stored strata. For m >= 3 the orbit count is a lower bound.
inline OrbitReport classify_found(const StrataStore& store, GroupTag group) {
  if (store.found.empty()) throw ContractViolation("cannot classify an empty store");
  const auto strata = store.strata();
  return orbit_partition(strata, group, store.n);
}

/// Problems with stored entries: witness not totally nonzero, key mismatch, or a
/// key that fails the three-term check. Empty when the store is sound.
inline std::vector<std::string> validate_store(const StrataStore& store) {
  std::vector<std::string> problems;
  for (const auto& [key, entry] : store.found) {
    if (entry.witness.m() != store.m || entry.witness.n() != store.n) {
      problems.push_back(key + ": witness has wrong shape");
      continue;
    }
    if (auto zero = first_zero_minor(entry.witness)) {
      problems.push_back(key + ": witness has zero minor at " + subset_to_string(*zero));
      continue;
    }
    if (canonicalize(sign_vector(entry.witness)).to_string() != key) problems.push_back(key + ": witness reproduces a different stratum");
    if (!three_term_feasible(SignVector::parse(key, store.n, store.m))) problems.push_back(key + ": fails the three-term check");
  }
  return problems;
}

// ---- store file: {"m":int,"n":int,"strata":[{"signs":..,"witness":{..},"seed":int,"sample":int},...]} ----

inline std::string store_to_json(const StrataStore& store) {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& [key, entry] : store.found)
    strata.push_back({{"signs", key}, {"witness", matrix_to_json(entry.witness)}, {"seed", entry.seed}, {"sample", entry.sample}});
  nlohmann::json doc{{"m", store.m}, {"n", store.n}, {"strata", std::move(strata)}};
  return doc.dump(1) + "\n";
}

inline StrataStore store_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid store JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("strata") || !doc["strata"].is_array())
    throw ParseError("store needs fields m, n, strata");
  StrataStore store(doc["m"].get<int>(), doc["n"].get<int>());
  if (store.m < 1 || store.n < store.m) throw ParseError("store needs n >= m >= 1");
  for (const auto& item : doc["strata"]) {
    if (!item.is_object() || !item.contains("signs") || !item.contains("witness") || !item.contains("seed") || !item.contains("sample"))
      throw ParseError("store entry needs signs, witness, seed, sample");
    const std::string key = item["signs"].get<std::string>();
    const SignVector parsed = SignVector::parse(key, store.n, store.m);
    if (parsed.negative(0)) throw ParseError("store key " + key + " is not canonical");
    StoreEntry entry{matrix_from_json(item["witness"]), item["seed"].get<std::uint64_t>(), item["sample"].get<std::uint64_t>()};
    if (!store.found.emplace(key, std::move(entry)).second) throw ParseError("duplicate store key " + key);
  }
  return store;
}

}  // namespace tnz
