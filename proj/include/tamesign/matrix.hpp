#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tamesign/gf.hpp"

namespace tamesign::linalg {

using gf::Elem;
using gf::Field;

/// Square matrix over F_q, row-major, 0-based. Entries are field elements
/// of whatever field the caller passes to the free functions below.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  Matrix(std::size_t n, std::vector<Elem> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Elem& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  Elem operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  std::span<const Elem> row_major() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// Determinant by elimination.
Elem determinant(const Field& field, const Matrix& a);
/// nullopt when singular.
std::optional<Matrix> inverse(const Field& field, const Matrix& a);
Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
std::vector<Elem> apply(const Field& field, const Matrix& a, std::span<const Elem> x);

}  // namespace tamesign::linalg
