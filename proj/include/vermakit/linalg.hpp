#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vermakit/rational.hpp"

namespace vermakit {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  bool is_zero() const;

  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(std::span<const Matrix> blocks);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& a);

/// Basis of { x : a x = 0 }, one vector per free column of the reduced row
/// echelon form (in increasing column order). Each vector is scaled to a
/// primitive integer vector whose first nonzero entry is positive.
///
/// Elimination is fraction-free: rows are cleared to integers, combined by
/// cross-multiplication and divided by their content after every step.
/// Columns that never share a nonzero row are solved independently.
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

/// One solution of a x = rhs with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> rhs);

/// Clears denominators, divides by the content and fixes the sign so the
/// first nonzero entry is positive. The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::span<const Rational> v);

}  // namespace vermakit
