#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "s4/rational.hpp"

namespace s4 {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Fraction-free (Bareiss) determinant after clearing row denominators.
Rational determinant(const Matrix& m);

/// Throws Error when singular.
Matrix inverse(const Matrix& m);

/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  Vector solution;  // populated only when status == unique
};

/// Solves a possibly over-determined system a x = b exactly.
SolveResult solve(const Matrix& a, const Vector& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(const Vector& v);

}  // namespace s4
