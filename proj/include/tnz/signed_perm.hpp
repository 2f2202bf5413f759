#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tnz/errors.hpp"

namespace tnz {

/// A permutation sigma of [n], stored as images sigma(1..n) (values 1-based).
class PlainPerm {
public:
  PlainPerm() = default;
  explicit PlainPerm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw ContractViolation("not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static PlainPerm identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return PlainPerm(std::move(images));
  }

  /// Swaps i and j (1-based).
  static PlainPerm transposition(int n, int i, int j) {
    PlainPerm p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  PlainPerm inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return PlainPerm(std::move(inv));
  }

  /// (p * q)(i) = p(q(i)).
  friend PlainPerm operator*(const PlainPerm& p, const PlainPerm& q) {
    if (p.n() != q.n()) throw ContractViolation("permutation size mismatch");
    std::vector<int> out(p.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p(q.images_[i]);
    return PlainPerm(std::move(out));
  }

  friend bool operator==(const PlainPerm&, const PlainPerm&) = default;

private:
  std::vector<int> images_;
};

/// Sign pattern d in {+1,-1}^n: the part of a column scaling that survives on strata.
class ReflectionVector {
public:
  ReflectionVector() = default;
  explicit ReflectionVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw ContractViolation("reflection entries must be +1 or -1");
  }
  static ReflectionVector identity(int n) { return ReflectionVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int n() const { return static_cast<int>(signs_.size()); }
  int operator()(int i) const { return signs_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& signs() const { return signs_; }

  friend bool operator==(const ReflectionVector&, const ReflectionVector&) = default;

private:
  std::vector<int> signs_;
};

/// Element (a_1, ..., a_n) of the signed permutation group P_n. Its matrix sends
/// e_i to sgn(a_i) e_{|a_i|}; composition is matrix multiplication.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int a : entries_) {
      const int v = std::abs(a);
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw ContractViolation("not a signed permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static SignedPerm identity(int n) { return from_parts(PlainPerm::identity(n), ReflectionVector::identity(n)); }

  /// Sequence with |a_i| = sigma(i) and sgn(a_i) = d_i.
  static SignedPerm from_parts(const PlainPerm& sigma, const ReflectionVector& d) {
    if (sigma.n() != d.n()) throw ContractViolation("signed permutation size mismatch");
    std::vector<int> entries(static_cast<std::size_t>(sigma.n()));
    for (int i = 1; i <= sigma.n(); ++i) entries[static_cast<std::size_t>(i - 1)] = d(i) * sigma(i);
    return SignedPerm(std::move(entries));
  }

  int n() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  PlainPerm permutation() const {
    std::vector<int> images(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) images[i] = std::abs(entries_[i]);
    return PlainPerm(std::move(images));
  }

  ReflectionVector reflection() const {
    std::vector<int> signs(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) signs[i] = entries_[i] < 0 ? -1 : 1;
    return ReflectionVector(std::move(signs));
  }

  SignedPerm inverse() const {
    std::vector<int> inv(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const int a = entries_[i];
      inv[static_cast<std::size_t>(std::abs(a) - 1)] = (a < 0 ? -1 : 1) * (static_cast<int>(i) + 1);
    }
    return SignedPerm(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Dense signed permutation matrix, row-major, 0-based.
  std::vector<std::vector<int>> matrix() const {
    const std::size_t n = entries_.size();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const int a = entries_[i];
      out[static_cast<std::size_t>(std::abs(a) - 1)][i] = a < 0 ? -1 : 1;
    }
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    return os.str();
  }

  /// Parses "-3,1,2". Spaces around entries are ignored.
  static SignedPerm parse(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string token(text.substr(pos, comma - pos));
      while (!token.empty() && token.back() == ' ') token.pop_back();
      token.erase(0, token.find_first_not_of(' ') == std::string::npos ? token.size() : token.find_first_not_of(' '));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw ParseError("malformed signed permutation entry '" + token + "'");
      }
      if (used != token.size()) throw ParseError("malformed signed permutation entry '" + token + "'");
      entries.push_back(value);
      pos = comma + 1;
    }
    try {
      return SignedPerm(std::move(entries));
    } catch (const ContractViolation& e) {
      throw ParseError(e.what());
    }
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

private:
  std::vector<int> entries_;
};

/// Product p * q of signed permutation matrices: (p * q)_i = sgn(q_i) p_{|q_i|}.
inline SignedPerm compose(const SignedPerm& p, const SignedPerm& q) {
  if (p.n() != q.n()) throw ContractViolation("signed permutation size mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.n(); ++i) {
    const int b = q(i);
    out[static_cast<std::size_t>(i - 1)] = (b < 0 ? -1 : 1) * p(std::abs(b));
  }
  return SignedPerm(std::move(out));
}

/// (-n, 1, 2, ..., n-1), generator of the cyclic subgroup K_n of order 2n.
inline SignedPerm kn_generator(int n) {
  if (n < 1) throw ContractViolation("kn_generator needs n >= 1");
  std::vector<int> entries(static_cast<std::size_t>(n));
  entries[0] = -n;
  for (int i = 2; i <= n; ++i) entries[static_cast<std::size_t>(i - 1)] = i - 1;
  return SignedPerm(std::move(entries));
}

/// All powers g^0, g^1, ... of g until the identity recurs.
inline std::vector<SignedPerm> cyclic_closure(const SignedPerm& g) {
  std::vector<SignedPerm> powers{SignedPerm::identity(g.n())};
  SignedPerm current = g;
  while (!current.is_identity()) {
    powers.push_back(current);
    current = compose(g, current);
  }
  return powers;
}

/// Membership table for K_n, sorted for binary search.
class KnSubgroup {
public:
  explicit KnSubgroup(int n) : elements_(cyclic_closure(kn_generator(n))) { std::sort(elements_.begin(), elements_.end()); }
  bool contains(const SignedPerm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<SignedPerm>& elements() const { return elements_; }

private:
  std::vector<SignedPerm> elements_;
};

/// Calls f on every permutation of [n] in lexicographic order of images.
template <typename F>
void for_each_plain_perm(int n, F&& f) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    f(PlainPerm(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

/// Calls f on every element of P_n (2^n n! of them).
template <typename F>
void for_each_signed_perm(int n, F&& f) {
  for_each_plain_perm(n, [&](const PlainPerm& sigma) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1U ? -1 : 1;
      f(SignedPerm::from_parts(sigma, ReflectionVector(std::move(signs))));
    }
  });
}

/// Left coset representatives of K_n in P_n: every (1, a_2, ..., a_n) with
/// (a_2, ..., a_n) a signed permutation of 2..n. There are 2^{n-1} (n-1)!.
inline std::vector<SignedPerm> coset_reps(int n) {
  if (n < 2) throw ContractViolation("coset_reps needs n >= 2");
  std::vector<SignedPerm> reps;
  for_each_signed_perm(n - 1, [&](const SignedPerm& tail) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    entries[0] = 1;
    for (int i = 1; i <= n - 1; ++i) {
      const int a = tail(i);
      entries[static_cast<std::size_t>(i)] = a < 0 ? a - 1 : a + 1;
    }
    reps.emplace_back(std::move(entries));
  });
  return reps;
}

}  // namespace tnz
