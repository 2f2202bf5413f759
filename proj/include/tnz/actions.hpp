#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tnz/errors.hpp"
#include "tnz/matrix.hpp"
#include "tnz/sign_vector.hpp"
#include "tnz/signed_perm.hpp"
#include "tnz/subsets.hpp"

namespace tnz {

/// Signed relabeling of sign-vector positions: out[r] = flip[r] * in[source[r]].
/// Every group action on sign vectors below is one of these.
class SignVectorTransform {
public:
  /// Transform induced by ((d), sigma): columns are scaled by d, then moved so
  /// that new column j is old column sigma^{-1}(j). This is M -> M P^{-1} for
  /// the signed permutation matrix P of from_parts(sigma, d).
  SignVectorTransform(int n, int m, const PlainPerm& sigma, const ReflectionVector& d) : n_(n), m_(m) {
    if (sigma.n() != n || d.n() != n) throw ContractViolation("action size mismatch");
    const SubsetIndexer& idx = SubsetIndexer::shared(n, m);
    const PlainPerm inv = sigma.inverse();
    source_.resize(idx.size());
    flip_.resize(idx.size());
    Subset pre(static_cast<std::size_t>(m));
    for (std::uint64_t r = 0; r < idx.size(); ++r) {
      const Subset& target = idx.unrank(r);
      int sign = 1;
      for (std::size_t k = 0; k < target.size(); ++k) {
        pre[k] = inv(target[k]);
        sign *= d(pre[k]);
      }
      // sign of the permutation sorting (sigma^{-1}(i))_{i in I}, by inversion count
      for (std::size_t a = 0; a < pre.size(); ++a)
        for (std::size_t b = a + 1; b < pre.size(); ++b)
          if (pre[a] > pre[b]) sign = -sign;
      Subset sorted = pre;
      std::sort(sorted.begin(), sorted.end());
      source_[r] = idx.rank(sorted);
      flip_[r] = sign < 0;
    }
  }

  explicit SignVectorTransform(int m, const SignedPerm& p) : SignVectorTransform(p.n(), m, p.permutation(), p.reflection()) {}

  int n() const { return n_; }
  int m() const { return m_; }

  SignVector apply(const SignVector& s) const {
    if (s.n() != n_ || s.m() != m_) throw ContractViolation("sign vector does not match action size");
    SignVector out(n_, m_);
    for (std::uint64_t r = 0; r < source_.size(); ++r)
      if (s.negative(source_[r]) != static_cast<bool>(flip_[r])) out.set(r, -1);
    return out;
  }

  Stratum apply(const Stratum& t) const { return canonicalize(apply(t.canonical())); }

private:
  int n_;
  int m_;
  std::vector<std::uint64_t> source_;
  std::vector<char> flip_;
};

/// Sign vector of M P^{-1}, i.e. new column j is old column sigma^{-1}(j).
inline SignVector act_perm_on_sign_vector(const PlainPerm& sigma, const SignVector& s) {
  if (sigma.n() != s.n()) throw ContractViolation("permutation size does not match sign vector");
  return SignVectorTransform(s.n(), s.m(), sigma, ReflectionVector::identity(s.n())).apply(s);
}

/// Entry at I multiplied by the product of d_i over i in I.
inline SignVector act_reflection_on_sign_vector(const ReflectionVector& d, const SignVector& s) {
  if (d.n() != s.n()) throw ContractViolation("reflection size does not match sign vector");
  const SubsetIndexer& idx = SubsetIndexer::shared(s.n(), s.m());
  SignVector out = s;
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    int prod = 1;
    for (int i : idx.unrank(r)) prod *= d(i);
    if (prod < 0) out.flip(r);
  }
  return out;
}

/// p = (sigma, d): reflect by d, then permute by sigma, then re-canonicalize.
inline Stratum act_signed_perm_on_stratum(const SignedPerm& p, const Stratum& t) {
  if (p.n() != t.n()) throw ContractViolation("signed permutation size does not match stratum");
  return canonicalize(act_perm_on_sign_vector(p.permutation(), act_reflection_on_sign_vector(p.reflection(), t.canonical())));
}

/// Matrix-level counterpart of the actions: column j of the result is
/// d_{sigma^{-1}(j)} v_{sigma^{-1}(j)}.
inline RationalMatrix transform_columns(const RationalMatrix& mat, const SignedPerm& p) {
  if (p.n() != mat.n()) throw ContractViolation("signed permutation size does not match matrix");
  const SignedPerm inv = p.inverse();
  std::vector<int> source(static_cast<std::size_t>(mat.n()));
  std::vector<Rational> factors(static_cast<std::size_t>(mat.n()));
  for (int j = 1; j <= mat.n(); ++j) {
    const int a = inv(j);  // sgn(a) = d_{sigma^{-1}(j)}
    source[static_cast<std::size_t>(j - 1)] = std::abs(a) - 1;
    factors[static_cast<std::size_t>(j - 1)] = Rational(a < 0 ? -1 : 1);
  }
  return mat.select_columns(source).scale_columns(factors);
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<PlainPerm> witness;  // sigma with canonicalize(sigma . sign(N)) == canonicalize(sign(M))
};

/// Decides whether the generic arrangements given by the columns of M and N are
/// isomorphic: searches sigma in S_n with canonicalize(act_perm(sigma, sign(N)))
/// equal to canonicalize(sign(M)). Backtracks over sigma^{-1}(1), sigma^{-1}(2), ...
/// and prunes as soon as a fully assigned m-subset disagrees.
inline IsomorphismResult arrangement_isomorphic(const RationalMatrix& mat_m, const RationalMatrix& mat_n) {
  if (mat_m.m() != mat_n.m() || mat_m.n() != mat_n.n()) return {};
  const int n = mat_m.n();
  const int m = mat_m.m();
  const SignVector target = sign_vector(mat_m);
  const SignVector source = sign_vector(mat_n);
  const SubsetIndexer& idx = SubsetIndexer::shared(n, m);

  // subsets grouped by their largest element, so they can be checked once fully assigned
  std::vector<std::vector<std::uint64_t>> by_max(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t r = 0; r < idx.size(); ++r) by_max[static_cast<std::size_t>(idx.unrank(r).back())].push_back(r);

  std::vector<int> pre(static_cast<std::size_t>(n) + 1, 0);  // pre[j] = sigma^{-1}(j)
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  Subset mapped(static_cast<std::size_t>(m));

  // g is the global sign relating the two vectors, 0 until the first full subset fixes it
  auto consistent = [&](int j, int& g) {
    for (std::uint64_t r : by_max[static_cast<std::size_t>(j)]) {
      const Subset& target_set = idx.unrank(r);
      int sign = 1;
      for (std::size_t k = 0; k < target_set.size(); ++k) mapped[k] = pre[static_cast<std::size_t>(target_set[k])];
      for (std::size_t a = 0; a < mapped.size(); ++a)
        for (std::size_t b = a + 1; b < mapped.size(); ++b)
          if (mapped[a] > mapped[b]) sign = -sign;
      std::sort(mapped.begin(), mapped.end());
      const int value = sign * source[idx.rank(mapped)];
      const int rel = value * target[r];
      if (g == 0)
        g = rel;
      else if (g != rel)
        return false;
    }
    return true;
  };

  std::function<bool(int, int)> search = [&](int j, int g) -> bool {
    if (j > n) return true;
    for (int c = 1; c <= n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = 1;
      pre[static_cast<std::size_t>(j)] = c;
      int g2 = g;
      if (consistent(j, g2) && search(j + 1, g2)) return true;
      used[static_cast<std::size_t>(c)] = 0;
    }
    return false;
  };

  if (!search(1, 0)) return {};
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(pre[static_cast<std::size_t>(j)] - 1)] = j;
  return {true, PlainPerm(std::move(images))};
}

}  // namespace tnz
