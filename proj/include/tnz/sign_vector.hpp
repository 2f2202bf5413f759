#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tnz/errors.hpp"
#include "tnz/matrix.hpp"
#include "tnz/subsets.hpp"

namespace tnz {

/// Signs of the Plücker coordinates of a totally nonzero m x n matrix, one per
/// m-subset in lexicographic order. Packed as bits: + is 0, - is 1.
class SignVector {
public:
  SignVector() = default;

  /// All entries +1.
  SignVector(int n, int m) : n_(n), m_(m), size_(binomial(n, m)), words_((size_ + 63) / 64, 0) {
    if (m < 0 || n < m) throw ContractViolation("sign vector needs 0 <= m <= n");
  }

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }

  int operator[](std::uint64_t rank) const { return negative(rank) ? -1 : 1; }
  bool negative(std::uint64_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }

  void set(std::uint64_t rank, int sign) {
    const std::uint64_t bit = std::uint64_t{1} << (rank & 63);
    if (sign < 0)
      words_[rank >> 6] |= bit;
    else
      words_[rank >> 6] &= ~bit;
  }
  void flip(std::uint64_t rank) { words_[rank >> 6] ^= std::uint64_t{1} << (rank & 63); }

  SignVector operator-() const {
    SignVector out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Same order as comparing to_string() ('+' before '-'), without allocating.
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[i] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  /// "+"/"-" per entry in indexer order.
  std::string to_string() const {
    std::string out(size_, '+');
    for (std::uint64_t r = 0; r < size_; ++r)
      if (negative(r)) out[r] = '-';
    return out;
  }

  static SignVector parse(std::string_view text, int n, int m) {
    SignVector out(n, m);
    if (text.size() != out.size())
      throw ParseError("sign vector length " + std::to_string(text.size()) + " does not match C(" + std::to_string(n) + "," +
                       std::to_string(m) + ") = " + std::to_string(out.size()));
    for (std::uint64_t r = 0; r < out.size(); ++r) {
      if (text[r] == '-')
        out.set(r, -1);
      else if (text[r] != '+')
        throw ParseError("sign vector may only contain '+' and '-'");
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::uint64_t>{}(size_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  int n_ = 0;
  int m_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A stratum: the class {s, -s}, represented by the member whose first entry is +1.
class Stratum {
public:
  Stratum() = default;

  const SignVector& canonical() const { return canonical_; }
  int n() const { return canonical_.n(); }
  int m() const { return canonical_.m(); }
  std::string to_string() const { return canonical_.to_string(); }

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend std::strong_ordering operator<=>(const Stratum& a, const Stratum& b) { return a.canonical_ <=> b.canonical_; }

  friend Stratum canonicalize(SignVector s);

private:
  explicit Stratum(SignVector s) : canonical_(std::move(s)) {}
  SignVector canonical_;
};

inline Stratum canonicalize(SignVector s) {
  if (s.size() > 0 && s.negative(0)) s = -s;
  return Stratum(std::move(s));
}

/// Sign of every maximal minor; throws NotGeneric naming the first vanishing subset.
inline SignVector sign_vector(const RationalMatrix& mat) {
  const SubsetIndexer& idx = SubsetIndexer::shared(mat.n(), mat.m());
  SignVector out(mat.n(), mat.m());
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    const int s = maximal_minor(mat, idx.unrank(r)).sign();
    if (s == 0) throw NotGeneric("zero minor at " + subset_to_string(idx.unrank(r)));
    out.set(r, s);
  }
  return out;
}

/// Sign-level check of every three-term Grassmann-Plücker relation
///   D(S+ac) D(S+bd) = D(S+ab) D(S+cd) + D(S+ad) D(S+bc)
/// over (m-2)-subsets S and a<b<c<d outside S. A relation is violated when both
/// right-hand products share a sign that differs from the left-hand product.
/// Necessary for a stratum to be nonempty, not sufficient. Vacuously true when
/// no quadruple exists (m < 2 or n < m + 2).
inline bool three_term_feasible(const SignVector& s) {
  const int n = s.n();
  const int m = s.m();
  if (m < 2 || n < m + 2) return true;
  const SubsetIndexer& idx = SubsetIndexer::shared(n, m);
  const SubsetIndexer& base = SubsetIndexer::shared(n, m - 2);

  std::vector<char> in_base(static_cast<std::size_t>(n) + 1);
  std::vector<int> rest;
  Subset merged(static_cast<std::size_t>(m));
  auto sign_of = [&](const Subset& stem, int x, int y) {
    // merge stem with {x, y}; x < y
    std::size_t i = 0, out = 0;
    for (int v : {x, y}) {
      while (i < stem.size() && stem[i] < v) merged[out++] = stem[i++];
      merged[out++] = v;
    }
    while (i < stem.size()) merged[out++] = stem[i++];
    return s[idx.rank(merged)];
  };

  for (const Subset& stem : base.subsets()) {
    std::fill(in_base.begin(), in_base.end(), 0);
    for (int v : stem) in_base[static_cast<std::size_t>(v)] = 1;
    rest.clear();
    for (int v = 1; v <= n; ++v)
      if (!in_base[static_cast<std::size_t>(v)]) rest.push_back(v);
    const std::size_t k = rest.size();
    for (std::size_t ia = 0; ia < k; ++ia)
      for (std::size_t ib = ia + 1; ib < k; ++ib)
        for (std::size_t ic = ib + 1; ic < k; ++ic)
          for (std::size_t id = ic + 1; id < k; ++id) {
            const int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
            const int lhs = sign_of(stem, a, c) * sign_of(stem, b, d);
            const int t1 = sign_of(stem, a, b) * sign_of(stem, c, d);
            const int t2 = sign_of(stem, a, d) * sign_of(stem, b, c);
            if (t1 == t2 && t1 != lhs) return false;
          }
  }
  return true;
}

}  // namespace tnz

template <>
struct std::hash<tnz::SignVector> {
  std::size_t operator()(const tnz::SignVector& s) const noexcept { return s.hash(); }
};

template <>
struct std::hash<tnz::Stratum> {
  std::size_t operator()(const tnz::Stratum& s) const noexcept { return s.canonical().hash(); }
};
