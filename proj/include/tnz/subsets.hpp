#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tnz/errors.hpp"

namespace tnz {

/// Sorted list of 1-based column indices.
using Subset = std::vector<int>;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

inline std::string subset_to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

/// Lexicographic bijection between sorted m-subsets of [n] and {0, ..., C(n,m)-1}.
///
/// The full subset list is materialized on construction, so unrank is a lookup.
/// Use shared() inside hot loops to avoid rebuilding the table.
class SubsetIndexer {
public:
  SubsetIndexer(int n, int m) : n_(n), m_(m) {
    if (m < 0 || n < m) throw ContractViolation("subset indexer needs 0 <= m <= n");
    size_ = binomial(n, m);
    subsets_.reserve(size_);
    Subset current(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) current[static_cast<std::size_t>(i)] = i + 1;
    for (std::uint64_t r = 0; r < size_; ++r) {
      subsets_.push_back(current);
      // advance to the lexicographic successor
      int i = m - 1;
      while (i >= 0 && current[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
      if (i < 0) break;
      ++current[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(const Subset& subset) const {
    validate(subset);
    // count the subsets that precede `subset` position by position
    std::uint64_t r = 0;
    int prev = 0;
    for (int pos = 0; pos < m_; ++pos) {
      int v = subset[static_cast<std::size_t>(pos)];
      for (int x = prev + 1; x < v; ++x) r += binomial(n_ - x, m_ - pos - 1);
      prev = v;
    }
    return r;
  }

  const Subset& unrank(std::uint64_t r) const {
    if (r >= size_) throw ContractViolation("subset rank out of range");
    return subsets_[r];
  }

  const std::vector<Subset>& subsets() const { return subsets_; }

  /// Process-wide cached indexer for (n, m).
  static const SubsetIndexer& shared(int n, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<SubsetIndexer>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, m}];
    if (!slot) slot = std::make_unique<SubsetIndexer>(n, m);
    return *slot;
  }

private:
  void validate(const Subset& subset) const {
    if (static_cast<int>(subset.size()) != m_) throw ContractViolation("subset has wrong size: " + subset_to_string(subset));
    int prev = 0;
    for (int v : subset) {
      if (v <= prev || v > n_) throw ContractViolation("malformed subset: " + subset_to_string(subset));
      prev = v;
    }
  }

  int n_;
  int m_;
  std::uint64_t size_ = 0;
  std::vector<Subset> subsets_;
};

}  // namespace tnz
