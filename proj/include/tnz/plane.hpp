#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tnz/errors.hpp"
#include "tnz/matrix.hpp"
#include "tnz/sign_vector.hpp"
#include "tnz/signed_perm.hpp"

// Dimension two: points in the plane, their angular order, and the strata of Gr^tnz(2, n).

namespace tnz {

/// n x n antisymmetric sign matrix, zero diagonal, nonzero elsewhere. Indices are 1-based.
class OrientationSignMatrix {
public:
  explicit OrientationSignMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  /// The standard matrix O_n: +1 above the diagonal, -1 below.
  static OrientationSignMatrix standard(int n) {
    OrientationSignMatrix o(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) o.set(i, j, i < j ? 1 : (i > j ? -1 : 0));
    return o;
  }

  int n() const { return n_; }
  int operator()(int i, int j) const { return cells_[at(i, j)]; }
  void set(int i, int j, int v) { cells_[at(i, j)] = static_cast<signed char>(v); }

  bool valid() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        if (i == j && (*this)(i, j) != 0) return false;
        if (i != j && ((*this)(i, j) == 0 || (*this)(i, j) != -(*this)(j, i))) return false;
      }
    return true;
  }

  OrientationSignMatrix transposed() const {
    OrientationSignMatrix t(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) t.set(i, j, (*this)(j, i));
    return t;
  }

  /// Strictly upper triangle in lexicographic pair order {12, 13, ..., (n-1)n}.
  SignVector upper_triangle() const {
    SignVector s(n_, 2);
    std::uint64_t r = 0;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j, ++r) s.set(r, (*this)(i, j));
    return s;
  }

  friend bool operator==(const OrientationSignMatrix&, const OrientationSignMatrix&) = default;
  friend auto operator<=>(const OrientationSignMatrix&, const OrientationSignMatrix&) = default;

private:
  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }
  int n_;
  std::vector<signed char> cells_;
};

/// Combinatorial representation: an element of P_n. For angle-sorted columns |a_i| = i.
using CombinatorialRep = SignedPerm;

namespace detail {

inline void require_plane(const RationalMatrix& mat) {
  if (mat.m() != 2) throw ContractViolation("dimension-two operation needs m = 2, got m = " + std::to_string(mat.m()));
}

inline Rational cross(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) { return ux * vy - uy * vx; }

}  // namespace detail

inline OrientationSignMatrix orientation_matrix(const RationalMatrix& mat) {
  detail::require_plane(mat);
  const int n = mat.n();
  OrientationSignMatrix o(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int s = detail::cross(mat(0, i - 1), mat(1, i - 1), mat(0, j - 1), mat(1, j - 1)).sign();
      if (s == 0) throw NotGeneric("zero minor at {" + std::to_string(i) + "," + std::to_string(j) + "}");
      o.set(i, j, s);
      o.set(j, i, -s);
    }
  return o;
}

/// Column indices (0-based) ordered by the angle of their line in [0, pi).
/// Each column is flipped into the upper half-plane (y > 0, or y = 0 and x > 0)
/// and u precedes v iff cross(u, v) > 0. No trigonometry is involved.
inline std::vector<int> angular_order(const RationalMatrix& mat) {
  detail::require_plane(mat);
  const int n = mat.n();
  std::vector<Rational> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    Rational x = mat(0, c), y = mat(1, c);
    if (y.sign() < 0 || (y.is_zero() && x.sign() < 0)) {
      x = -x;
      y = -y;
    }
    if (x.is_zero() && y.is_zero()) throw NotGeneric("zero column " + std::to_string(c + 1));
    xs[static_cast<std::size_t>(c)] = std::move(x);
    ys[static_cast<std::size_t>(c)] = std::move(y);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto line_sign = [&](int u, int v) {
    const auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
    return detail::cross(xs[a], ys[a], xs[b], ys[b]).sign();
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (line_sign(i, j) == 0)
        throw NotGeneric("columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " span the same line");
  std::sort(order.begin(), order.end(), [&](int u, int v) { return line_sign(u, v) > 0; });
  return order;
}

/// Combinatorial representation aligned to the original column order: column k
/// gets a_{tau(k)} where tau(k) is its angular position. At position 1 the sign
/// comes from x when y = 0, otherwise from y; later positions use sgn(y) * position.
inline CombinatorialRep combinatorial_rep(const RationalMatrix& mat) {
  const std::vector<int> order = angular_order(mat);
  std::vector<int> rep(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int c = order[pos];
    const Rational& x = mat(0, c);
    const Rational& y = mat(1, c);
    const int s = (pos == 0 && y.is_zero()) ? x.sign() : y.sign();
    rep[static_cast<std::size_t>(c)] = s * static_cast<int>(pos + 1);
  }
  return SignedPerm(std::move(rep));
}

/// P O_n P^{-1} for the signed permutation matrix P of p.
inline OrientationSignMatrix conjugate_standard(const SignedPerm& p) {
  // P e_k = s_k e_{|p_k|}, so (P O_n P^{-1})[|p_k|][|p_l|] = s_k s_l O_n[k][l]
  const int n = p.n();
  OrientationSignMatrix o(n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      const int a = p(k), b = p(l);
      const int std_kl = k < l ? 1 : (k > l ? -1 : 0);
      o.set(std::abs(a), std::abs(b), (a < 0 ? -1 : 1) * (b < 0 ? -1 : 1) * std_kl);
    }
  return o;
}

/// Orientation matrix of any configuration whose combinatorial representation is rep:
/// O[k][l] = sgn(a_k a_l (|a_l| - |a_k|)). Equals conjugate_standard(rep^{-1}).
inline OrientationSignMatrix orientation_from_rep(const CombinatorialRep& rep) { return conjugate_standard(rep.inverse()); }

/// Integer witness realizing rep: the angular slot t gets direction (1, 0) for t = 1
/// and (n - t, 1) otherwise, multiplied by sgn(a).
inline RationalMatrix witness_from_rep(const CombinatorialRep& rep) {
  const int n = rep.n();
  if (n < 2) throw ContractViolation("witness needs n >= 2");
  RationalMatrix out(2, n);
  for (int k = 1; k <= n; ++k) {
    const int a = rep(k);
    const int slot = std::abs(a);
    const int s = a < 0 ? -1 : 1;
    out(0, k - 1) = Rational(s * (slot == 1 ? 1 : n - slot));
    out(1, k - 1) = Rational(slot == 1 ? 0 : s);
  }
  return out;
}

constexpr int kMaxUnguardedPlaneN = 8;
constexpr int kMaxPlaneN = 10;

inline void require_plane_enumeration(int n, bool allow_large) {
  if (n < 2) throw ContractViolation("enumerate_strata_2d needs n >= 2");
  if (n > kMaxPlaneN) throw ContractViolation("enumerate_strata_2d supports n <= " + std::to_string(kMaxPlaneN));
  if (n > kMaxUnguardedPlaneN && !allow_large)
    throw ContractViolation("n = " + std::to_string(n) + " needs the large-enumeration override");
}

/// Each stratum of Gr^tnz(2, n) with the first coset representative that produces it,
/// sorted by stratum.
inline std::vector<std::pair<Stratum, CombinatorialRep>> enumerate_strata_2d_with_reps(int n, bool allow_large = false) {
  require_plane_enumeration(n, allow_large);
  std::unordered_map<Stratum, CombinatorialRep> seen;
  for_each_signed_perm(n - 1, [&](const SignedPerm& tail) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    entries[0] = 1;
    for (int i = 1; i <= n - 1; ++i) entries[static_cast<std::size_t>(i)] = tail(i) < 0 ? tail(i) - 1 : tail(i) + 1;
    SignedPerm rep(std::move(entries));
    seen.try_emplace(canonicalize(orientation_from_rep(rep).upper_triangle()), std::move(rep));
  });
  std::vector<std::pair<Stratum, CombinatorialRep>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Strata of Gr^tnz(2, n) via coset representatives: the upper triangle of each
/// representative's orientation matrix, canonicalized and deduplicated. Sorted.
/// n > 8 requires allow_large; n > 10 is refused.
inline std::vector<Stratum> enumerate_strata_2d(int n, bool allow_large = false) {
  require_plane_enumeration(n, allow_large);
  std::unordered_set<Stratum> seen;
  for_each_signed_perm(n - 1, [&](const SignedPerm& tail) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    entries[0] = 1;
    for (int i = 1; i <= n - 1; ++i) entries[static_cast<std::size_t>(i)] = tail(i) < 0 ? tail(i) - 1 : tail(i) + 1;
    seen.insert(canonicalize(orientation_from_rep(SignedPerm(std::move(entries))).upper_triangle()));
  });
  std::vector<Stratum> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tnz
