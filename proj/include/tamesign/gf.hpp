#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tamesign::gf {

/// An element of F_q, stored by rank: the coefficient vector (c_0, ..., c_{m-1})
/// of c_0 + c_1 t + ... + c_{m-1} t^{m-1} maps to sum c_i p^i.
struct Elem {
  std::uint32_t rank = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Polynomial over F_p, lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// True iff `poly` (monic, degree >= 1) has no root in F_p and no monic
/// divisor of degree <= deg/2. Exhaustive; meant for small p^deg.
bool is_irreducible(const PrimePoly& poly, std::uint32_t p);

/// Modulus from the built-in table for q in {4, 8, 9, 16, 25, 27, 32, 49, 64}.
std::optional<PrimePoly> builtin_modulus(std::uint64_t q);

/// Throws NotPrime, ReducibleModulus, UnsupportedField.
FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::optional<PrimePoly> modulus = std::nullopt);

/// Same as make_field after splitting q = p^m.
FieldPtr make_field_of_order(std::uint64_t q, std::optional<PrimePoly> modulus = std::nullopt);

/// Finite field F_{p^m} with table-driven arithmetic.
///
/// Multiplication goes through exp/log tables built from the generator found
/// at construction; addition is XOR for p = 2, modular for m = 1 and a table
/// or digit-wise loop otherwise. Instances are immutable once built, so a
/// FieldPtr may be shared freely across threads.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  Field(std::uint32_t p, std::uint32_t m, PrimePoly modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Empty for prime fields.
  const PrimePoly& modulus() const noexcept { return modulus_; }

  bool operator==(const Field& other) const noexcept;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t value) const noexcept;
  /// element_unrank; throws RankOutOfRange.
  Elem element(std::uint64_t rank) const;
  /// element_rank; throws FieldMismatch if `e` is not an element of this field.
  std::uint32_t rank(Elem e) const;
  /// The class of t in F_p[t]/(modulus). Throws FieldMismatch on prime fields.
  Elem t() const;

  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem e) const;

  bool contains(Elem e) const noexcept { return e.rank < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// Product by polynomial multiplication and reduction, bypassing the tables.
  Elem mul_by_reduction(Elem a, Elem b) const;

  /// Smallest x >= 1 with c^x = 1; throws ZeroElement.
  std::uint64_t mult_order(Elem c) const;
  /// Smallest-rank element of order q - 1.
  Elem generator() const noexcept { return generator_; }
  /// h in [0, q-1) with g^h = c, by scanning powers of g.
  /// Throws ZeroElement, NotAGenerator.
  std::uint64_t discrete_log(Elem c, Elem g) const;
  /// discrete_log against generator(), by table lookup.
  std::uint32_t log(Elem c) const;
  /// generator()^h.
  Elem exp(std::uint64_t h) const noexcept { return Elem{exp_[h % (q_ - 1)]}; }
  /// Quadratic character; always true in characteristic 2. Throws ZeroElement.
  bool is_square(Elem c) const;

  /// Human/grammar rendering: "3" in prime fields, "t^2+2*t+1" otherwise.
  std::string format(Elem e) const;
  /// Rendering of the modulus, e.g. "t^2+t+1"; empty for prime fields.
  std::string format_modulus() const;

 private:
  void check(Elem e) const;
  Elem pow_by_reduction(Elem a, std::uint64_t e) const;
  std::uint64_t order_by_reduction(Elem c) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  PrimePoly modulus_;
  std::vector<std::uint64_t> order_primes_;  // distinct prime factors of q - 1
  Elem generator_;
  std::vector<std::uint32_t> exp_;  // length q - 1
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
  std::vector<std::uint32_t> neg_;  // length q
  std::vector<std::uint16_t> add_table_;  // q*q when used
};

std::string format_prime_poly(const PrimePoly& poly, char var = 't');

}  // namespace tamesign::gf
