#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tamesign/gf.hpp"
#include "tamesign/matrix.hpp"
#include "tamesign/mvpoly.hpp"

namespace tamesign::aut {

using gf::Elem;
using gf::FieldPtr;
using linalg::Matrix;
using poly::Polynomial;

/// An n-tuple of polynomials (f_1, ..., f_n) over one field, read as a map
/// F_q^n -> F_q^n.
class PolyMap {
 public:
  PolyMap(FieldPtr field, std::vector<Polynomial> components);

  static PolyMap identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return components_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  /// f_i, 1-based.
  const Polynomial& component(std::size_t i) const { return components_.at(i - 1); }

  std::vector<Elem> apply(std::span<const Elem> point) const;
  std::uint64_t degree() const noexcept;
  bool is_identity() const;

  bool operator==(const PolyMap& other) const;

  /// "(f_1, ..., f_n)" in the map grammar.
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Polynomial> components_;
};

/// (F o G)(x) = F(G(x)). Throws FieldMismatch, ArityMismatch.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// E_a on coordinate i: X_i -> X_i + a, with a free of X_i.
class ElementaryAut {
 public:
  /// Throws VariableUsed, ArityMismatch.
  static ElementaryAut make(std::size_t index, Polynomial addend);

  std::size_t index() const noexcept { return index_; }
  const Polynomial& addend() const noexcept { return addend_; }
  const FieldPtr& field() const noexcept { return addend_.field(); }
  std::size_t arity() const noexcept { return addend_.arity(); }

 private:
  ElementaryAut(std::size_t index, Polynomial addend) : index_(index), addend_(std::move(addend)) {}

  std::size_t index_;
  Polynomial addend_;
};

/// T_{i,j}: exchange X_i and X_j.
struct Swap {
  std::size_t i;
  std::size_t j;
  bool operator==(const Swap&) const = default;
};

/// D_i(c): X_i -> c X_i.
struct Scale {
  std::size_t i;
  Elem c;
  bool operator==(const Scale&) const = default;
};

/// R_{i,j}(c): X_i -> X_i + c X_j.
struct RowAdd {
  std::size_t i;
  std::size_t j;
  Elem c;
  bool operator==(const RowAdd&) const = default;
};

using LinearFactor = std::variant<Swap, Scale, RowAdd>;

/// Indices in [1, n], i != j, c != 0. Throws ArityMismatch, ZeroElement.
void validate(const LinearFactor& factor, const gf::Field& field, std::size_t n);
Matrix to_matrix(const LinearFactor& factor, const gf::Field& field, std::size_t n);
LinearFactor inverse(const LinearFactor& factor, const gf::Field& field);
std::string to_string(const LinearFactor& factor, const gf::Field& field);

/// x -> M x + b with M invertible.
class AffineAut {
 public:
  /// Throws SingularMatrix, ArityMismatch, FieldMismatch.
  static AffineAut make(FieldPtr field, Matrix matrix, std::vector<Elem> translation);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return matrix_.size(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::vector<Elem>& translation() const noexcept { return translation_; }
  Elem determinant() const noexcept { return det_; }

 private:
  AffineAut(FieldPtr field, Matrix matrix, std::vector<Elem> translation, Elem det)
      : field_(std::move(field)), matrix_(std::move(matrix)), translation_(std::move(translation)), det_(det) {}

  FieldPtr field_;
  Matrix matrix_;
  std::vector<Elem> translation_;
  Elem det_;
};

/// (a_1 X_1 + f_1(X_2..X_n), ..., a_n X_n + f_n) with every a_i != 0.
class TriangularAut {
 public:
  /// Throws ZeroDiagonal, TailUsesEarlyVariable, ArityMismatch, FieldMismatch.
  static TriangularAut make(FieldPtr field, std::vector<Elem> diag, std::vector<Polynomial> tails);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return diag_.size(); }
  const std::vector<Elem>& diag() const noexcept { return diag_; }
  const std::vector<Polynomial>& tails() const noexcept { return tails_; }
  bool is_strict() const noexcept;

 private:
  TriangularAut(FieldPtr field, std::vector<Elem> diag, std::vector<Polynomial> tails)
      : field_(std::move(field)), diag_(std::move(diag)), tails_(std::move(tails)) {}

  FieldPtr field_;
  std::vector<Elem> diag_;
  std::vector<Polynomial> tails_;
};

using TameFactor = std::variant<AffineAut, TriangularAut, ElementaryAut, LinearFactor>;

/// g_1 o g_2 o ... o g_k, outermost factor first. Empty means identity.
class TameWord {
 public:
  /// Throws FieldMismatch, ArityMismatch (and LinearFactor validation errors).
  TameWord(FieldPtr field, std::size_t n, std::vector<TameFactor> factors = {});

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return n_; }
  const std::vector<TameFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<TameFactor> factors_;
};

/// "affine", "triangular", "elementary", "swap", "scale", "rowadd".
std::string_view kind_name(const TameFactor& factor);

PolyMap to_polymap(const ElementaryAut& e);
PolyMap to_polymap(const AffineAut& a);
PolyMap to_polymap(const TriangularAut& j);
PolyMap to_polymap(const LinearFactor& factor, const FieldPtr& field, std::size_t n);
PolyMap to_polymap(const TameFactor& factor, const FieldPtr& field, std::size_t n);
PolyMap to_polymap(const TameWord& w);

ElementaryAut inverse(const ElementaryAut& e);
AffineAut inverse(const AffineAut& a);
/// Back-substitution from coordinate n upward.
TriangularAut inverse(const TriangularAut& j);

}  // namespace tamesign::aut
