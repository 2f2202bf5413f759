#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tnz/errors.hpp"
#include "tnz/rational.hpp"
#include "tnz/subsets.hpp"

namespace tnz {

/// Exact m x n matrix over the rationals, stored row-major. Requires 1 <= m <= n.
class RationalMatrix {
public:
  RationalMatrix(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < m) throw ContractViolation("matrix needs 1 <= m <= n");
    cells_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  }

  RationalMatrix(int m, int n, std::vector<Rational> cells) : RationalMatrix(m, n) {
    if (cells.size() != cells_.size()) throw ContractViolation("matrix cell count mismatch");
    cells_ = std::move(cells);
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw ContractViolation("matrix needs at least one row");
    RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < out.m_; ++r) {
      if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != out.n_) throw ContractViolation("ragged rows");
      for (int c = 0; c < out.n_; ++c) out(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return out;
  }

  int m() const { return m_; }
  int n() const { return n_; }

  // 0-based access
  Rational& operator()(int row, int col) { return cells_[index(row, col)]; }
  const Rational& operator()(int row, int col) const { return cells_[index(row, col)]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Matrix whose column j is column `source[j]` of this matrix (both 0-based).
  RationalMatrix select_columns(const std::vector<int>& source) const {
    RationalMatrix out(m_, static_cast<int>(source.size()));
    for (int r = 0; r < m_; ++r)
      for (std::size_t j = 0; j < source.size(); ++j) out(r, static_cast<int>(j)) = (*this)(r, source[j]);
    return out;
  }

  /// Multiplies column j by factors[j].
  RationalMatrix scale_columns(const std::vector<Rational>& factors) const {
    if (static_cast<int>(factors.size()) != n_) throw ContractViolation("scale factor count mismatch");
    RationalMatrix out = *this;
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < n_; ++c) out(r, c) *= factors[static_cast<std::size_t>(c)];
    return out;
  }

private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int m_;
  int n_;
  std::vector<Rational> cells_;
};

/// Left product A * M where A is square (A.m() == A.n() == M.m()).
inline RationalMatrix left_multiply(const RationalMatrix& a, const RationalMatrix& mat) {
  if (a.m() != a.n() || a.n() != mat.m()) throw ContractViolation("left factor must be square with matching size");
  RationalMatrix out(mat.m(), mat.n());
  for (int r = 0; r < mat.m(); ++r)
    for (int c = 0; c < mat.n(); ++c) {
      Rational acc;
      for (int k = 0; k < a.n(); ++k) acc += a(r, k) * mat(k, c);
      out(r, c) = std::move(acc);
    }
  return out;
}

/// Fraction-free Gaussian elimination on a row-major k x k integer matrix.
/// Every intermediate value is a minor of the input, so any integer type that
/// holds the square of the Hadamard bound is exact.
template <typename Int>
Int bareiss_determinant(std::vector<Int> a, std::size_t k) {
  if (k == 0) return Int(1);
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * k + c]; };
  Int sign = 1;
  Int prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return Int(0);
      for (std::size_t c = 0; c < k; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      for (std::size_t c = p + 1; c < k; ++c) at(r, c) = (at(r, c) * at(p, p) - at(r, p) * at(p, c)) / prev;
      at(r, p) = 0;
    }
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

/// Determinant of the square submatrix on the given 0-based columns.
/// Each column is scaled by the lcm of its denominators so the elimination runs over integers.
inline Rational submatrix_determinant(const RationalMatrix& mat, const std::vector<int>& columns) {
  const std::size_t k = columns.size();
  if (static_cast<int>(k) != mat.m()) throw ContractViolation("submatrix must be square");
  std::vector<BigInt> ints(k * k);
  BigInt scale = 1;
  for (std::size_t j = 0; j < k; ++j) {
    BigInt lcm = 1;
    for (std::size_t r = 0; r < k; ++r) {
      const BigInt& d = mat(static_cast<int>(r), columns[j]).denominator();
      if (d != 1) lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (std::size_t r = 0; r < k; ++r) {
      const Rational& x = mat(static_cast<int>(r), columns[j]);
      ints[r * k + j] = x.numerator() * (lcm / x.denominator());
    }
    scale *= lcm;
  }
  BigInt det = bareiss_determinant(std::move(ints), k);
  return Rational(std::move(det), std::move(scale));
}

/// Plücker coordinate: determinant of the columns in `subset` (1-based, increasing).
inline Rational maximal_minor(const RationalMatrix& mat, const Subset& subset) {
  if (static_cast<int>(subset.size()) != mat.m()) throw ContractViolation("subset size must equal row count: " + subset_to_string(subset));
  std::vector<int> columns;
  columns.reserve(subset.size());
  int prev = 0;
  for (int v : subset) {
    if (v <= prev || v > mat.n()) throw ContractViolation("subset out of range: " + subset_to_string(subset));
    columns.push_back(v - 1);
    prev = v;
  }
  return submatrix_determinant(mat, columns);
}

/// Determinant of a square matrix.
inline Rational determinant(const RationalMatrix& mat) {
  if (mat.m() != mat.n()) throw ContractViolation("determinant needs a square matrix");
  std::vector<int> columns(static_cast<std::size_t>(mat.n()));
  for (int i = 0; i < mat.n(); ++i) columns[static_cast<std::size_t>(i)] = i;
  return submatrix_determinant(mat, columns);
}

/// First m-subset (lexicographic) whose maximal minor vanishes, if any.
inline std::optional<Subset> first_zero_minor(const RationalMatrix& mat) {
  for (const Subset& s : SubsetIndexer::shared(mat.n(), mat.m()).subsets())
    if (maximal_minor(mat, s).is_zero()) return s;
  return std::nullopt;
}

inline bool is_totally_nonzero(const RationalMatrix& mat) { return !first_zero_minor(mat).has_value(); }

// ---- matrix file format: {"m": int, "n": int, "entries": [["p/q", ...], ...]} ----

inline nlohmann::json matrix_to_json(const RationalMatrix& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < mat.m(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < mat.n(); ++c) row.push_back(mat(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"m", mat.m()}, {"n", mat.n()}, {"entries", std::move(rows)}};
}

inline RationalMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("entries"))
    throw ParseError("matrix needs fields m, n, entries");
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer()) throw ParseError("m and n must be integers");
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  if (m < 1) throw ParseError("m must be at least 1");
  if (m > n) throw ParseError("m > n (" + std::to_string(m) + " > " + std::to_string(n) + ")");
  const auto& rows = doc["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != m)
    throw ParseError("entries must have exactly m = " + std::to_string(m) + " rows");
  RationalMatrix out(m, n);
  for (int r = 0; r < m; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("ragged row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      const std::string where = " at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (!cell.is_string()) throw ParseError("entry is not a string" + where);
      try {
        out(r, c) = Rational::parse(cell.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + where);
      }
    }
  }
  return out;
}

inline RationalMatrix parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

}  // namespace tnz
