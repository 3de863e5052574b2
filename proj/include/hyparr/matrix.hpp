#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// All rows must have the same length; an empty list yields a 0 x cols matrix.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RatVector row_vector(std::size_t i) const;
  void append_row(std::span<const Rational> r);

  RatVector operator*(std::span<const Rational> v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  /// Lexicographic on (rows, cols, entries); gives edges a stable order.
  friend bool operator<(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form with first-nonzero pivoting in column order.
RrefResult rref(const RatMatrix& m);

/// Nonzero rows of the RREF; the canonical basis of the row space.
RatMatrix row_space_basis(const RatMatrix& m);

std::size_t rank_of(const RatMatrix& m);

/// One vector per free column f: e_f minus the pivot entries of column f.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with m x = b (free variables set to 0), or nullopt when inconsistent.
/// Throws Error on a dimension mismatch.
std::optional<RatVector> linsolve(const RatMatrix& m, std::span<const Rational> b);

}  // namespace hyparr
