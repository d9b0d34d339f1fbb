#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ngo/bigint.hpp"

namespace ngo {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> row(std::size_t i) const;
  std::vector<BigInt> column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMatrix& other) const = default;

  /// Bracketed layout, one row per line: "[1 0 -1]\n[0 1 1]\n". A matrix
  /// with no rows prints "[]" followed by its shape, e.g. "[] (0x3)".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Rank over Q by fraction-free elimination.
std::size_t rank(IntMatrix m);

/// Determinant by Bareiss elimination. Square matrices only.
BigInt determinant(IntMatrix m);

/// U * A * V == S with U, V unimodular and S = diag(d_1, d_2, ...) where
/// d_1 | d_2 | ... and every d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Nonzero diagonal entries of S, in order.
  std::vector<BigInt> invariants() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// s x b1 matrix whose columns are a basis of the saturated kernel of the
/// surjection A: Z^s -> Z^{rows}. Columns are in Hermite-normal order, so
/// the result does not depend on the Smith reduction path.
/// Throws NotABoundaryMap when A is not surjective over Z.
IntMatrix gale_dual(const IntMatrix& a);

struct ExactnessReport {
  bool composes_to_zero = false;  // A * B == 0
  bool spans_kernel = false;      // rank B == s - rank A
  bool saturated = false;         // Z^s / im B torsion free
  bool injective = false;         // rank B == cols B
  bool surjective = false;        // Smith invariants of A all 1, full row rank
  /// Empty when exact; otherwise the first failing condition, one of
  /// "A*B != 0", "not spanning", "kernel not saturated", "B not injective",
  /// "A not surjective".
  std::string failure;

  bool exact() const { return failure.empty(); }
};

/// Certifies 0 -> Z^{cols B} --B--> Z^s --A--> Z^{rows A} -> 0 is exact.
ExactnessReport verify_exact(const IntMatrix& a, const IntMatrix& b);

}  // namespace ngo
