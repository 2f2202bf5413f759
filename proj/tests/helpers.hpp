#pragma once

#include <cstdint>
#include <vector>

#include "tnz/tnz.hpp"

namespace tnz::fixtures {

inline RationalMatrix random_integer_matrix(SplitMix64& rng, int m, int n, std::int64_t bound) {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (auto& e : entries) e = rng.uniform(-bound, bound);
  return integer_matrix(m, n, entries);
}

inline RationalMatrix random_rational_matrix(SplitMix64& rng, int m, int n) {
  RationalMatrix out(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = Rational(BigInt(rng.uniform(-30, 30)), BigInt(rng.uniform(1, 9)));
  return out;
}

inline RationalMatrix random_generic_matrix(SplitMix64& rng, int m, int n, std::int64_t bound = 20) {
  for (;;) {
    RationalMatrix mat = random_integer_matrix(rng, m, n, bound);
    if (is_totally_nonzero(mat)) return mat;
  }
}

/// Cofactor expansion along the first row; only for small k.
inline Rational laplace_determinant(const std::vector<std::vector<Rational>>& a) {
  const std::size_t k = a.size();
  if (k == 1) return a[0][0];
  Rational total;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = a[0][c] * laplace_determinant(minor);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

inline Rational laplace_minor(const RationalMatrix& mat, const Subset& cols) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(mat.m()));
  for (int r = 0; r < mat.m(); ++r)
    for (int c : cols) a[static_cast<std::size_t>(r)].push_back(mat(r, c - 1));
  return laplace_determinant(a);
}

}  // namespace tnz::fixtures
