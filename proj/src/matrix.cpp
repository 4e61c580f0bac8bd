#include "tamesign/matrix.hpp"

#include <utility>

#include "tamesign/error.hpp"

namespace tamesign::linalg {

Matrix::Matrix(std::size_t n, std::vector<Elem> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) {
    throw Error(ErrorKind::ArityMismatch,
                "matrix of " + std::to_string(data_.size()) + " entries is not " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Elem{1};
  return out;
}

Elem determinant(const Field& field, const Matrix& a) {
  Matrix m = a;
  const std::size_t n = m.size();
  Elem det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == field.zero()) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(col, k));
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const Elem pivot_inv = field.inv(m(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const Elem factor = field.mul(m(row, col), pivot_inv);
      if (factor == field.zero()) continue;
      for (std::size_t k = col; k < n; ++k) m(row, k) = field.sub(m(row, k), field.mul(factor, m(col, k)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& field, const Matrix& a) {
  Matrix m = a;
  const std::size_t n = m.size();
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == field.zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m(pivot, k), m(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const Elem scale = field.inv(m(col, col));
    for (std::size_t k = 0; k < n; ++k) {
      m(col, k) = field.mul(m(col, k), scale);
      inv(col, k) = field.mul(inv(col, k), scale);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m(row, col) == field.zero()) continue;
      const Elem factor = m(row, col);
      for (std::size_t k = 0; k < n; ++k) {
        m(row, k) = field.sub(m(row, k), field.mul(factor, m(col, k)));
        inv(row, k) = field.sub(inv(row, k), field.mul(factor, inv(col, k)));
      }
    }
  }
  return inv;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem acc = field.zero();
      for (std::size_t k = 0; k < n; ++k) acc = field.add(acc, field.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<Elem> apply(const Field& field, const Matrix& a, std::span<const Elem> x) {
  if (x.size() != a.size()) throw Error(ErrorKind::ArityMismatch, "vector length does not match matrix");
  std::vector<Elem> out(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) out[i] = field.add(out[i], field.mul(a(i, k), x[k]));
  }
  return out;
}

}  // namespace tamesign::linalg
