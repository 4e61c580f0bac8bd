#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamesign/gf.hpp"

namespace tamesign::poly {

using gf::Elem;
using gf::FieldPtr;

/// Exponent vector (e_1, ..., e_n) of X_1^{e_1} ... X_n^{e_n}.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::uint64_t degree() const noexcept;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order with X_1 > X_2 > ... > X_n.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial over F_q in n variables. Terms are kept collected and
/// without zero coefficients, so two equal polynomials compare equal
/// structurally. Variable indices are 1-based throughout.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Elem, GrlexLess>;

  Polynomial(FieldPtr field, std::size_t n);

  static Polynomial zero(FieldPtr field, std::size_t n) { return Polynomial(std::move(field), n); }
  static Polynomial constant(FieldPtr field, std::size_t n, Elem c);
  /// X_i.
  static Polynomial variable(FieldPtr field, std::size_t n, std::size_t i);
  static Polynomial monomial(FieldPtr field, std::size_t n, Elem c, std::vector<std::uint32_t> exponents);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest total degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  Elem constant_term() const;
  bool uses_variable(std::size_t i) const;
  /// Degree <= 1.
  bool is_affine_linear() const noexcept { return degree() <= 1; }
  /// Coefficient of X_i (the degree-1 monomial), zero if absent.
  Elem linear_coefficient(std::size_t i) const;

  /// Adds c * monomial into this polynomial, collecting.
  void add_term(const Monomial& m, Elem c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(Elem c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& other) const;

  /// Value at a point of F_q^n; throws ArityMismatch.
  Elem evaluate(std::span<const Elem> point) const;

  /// Formal substitution X_i -> images[i-1]; the result has the images' arity.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Grammar rendering, e.g. "X1^2 + 2*X2*X3 + 1"; "0" for zero.
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& other) const;

  FieldPtr field_;
  std::size_t n_;
  Terms terms_;
};

/// Number of terms whose exponent is >= 1 on every variable other than
/// `excluded` (on every variable when `excluded` is empty). Throws
/// VariableUsed when f depends on X_excluded.
std::uint64_t count_full_support_monomials(const Polynomial& f, std::optional<std::size_t> excluded);

/// The representative of f as a function on F_q^n: each exponent e >= 1 is
/// replaced by ((e - 1) mod (q - 1)) + 1 and terms are re-collected.
Polynomial reduce_exponents(const Polynomial& f);

}  // namespace tamesign::poly
