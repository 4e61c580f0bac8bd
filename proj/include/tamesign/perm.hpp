#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tamesign/automorphism.hpp"
#include "tamesign/gf.hpp"

namespace tamesign::perm {

using gf::Elem;
using gf::Field;

enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign sign_of_parity(std::uint64_t k) noexcept { return (k & 1u) ? Sign::minus : Sign::plus; }

/// Default cap on q^n for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// A bijection of [0, N) given by its image table.
class Permutation {
 public:
  /// Throws NotBijective if `images` is not a permutation of [0, N).
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t r) const noexcept { return images_[r]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  friend Permutation compose_permutations(const Permutation&, const Permutation&);

  std::vector<std::uint32_t> images_;
};

/// q^n, throwing BudgetExceeded when it is larger than `budget`.
std::uint64_t point_count(const Field& field, std::size_t n, std::uint64_t budget = kDefaultBudget);

/// sum_i rank(x_i) q^{i-1}.
std::uint64_t point_rank(const Field& field, std::span<const Elem> point);
/// Throws RankOutOfRange.
std::vector<Elem> point_unrank(const Field& field, std::size_t n, std::uint64_t rank);

/// pi_q(F). Points are evaluated in parallel (OpenMP) through a compiled
/// log-domain evaluator; the result is identical to the serial reference.
/// Throws BudgetExceeded, NotBijective (with a colliding input pair).
Permutation induced_permutation(const aut::PolyMap& map, std::uint64_t budget = kDefaultBudget);

/// pi_q(g_1 o ... o g_k) = pi_q(g_1) o ... o pi_q(g_k), evaluated factor by
/// factor so the composite polynomials are never expanded.
Permutation induced_permutation(const aut::TameWord& word, std::uint64_t budget = kDefaultBudget);

/// Reference implementation: one Polynomial::evaluate per component per point.
Permutation induced_permutation_serial(const aut::PolyMap& map, std::uint64_t budget = kDefaultBudget);

/// (-1)^(N - #cycles).
Sign permutation_sign(const Permutation& sigma);
/// Parity of the inversion count, O(N^2); parallel reduction over rows.
Sign permutation_sign_by_inversions(const Permutation& sigma);

std::size_t cycle_count(const Permutation& sigma);
/// Cycles of length >= 2, each starting at its smallest rank, ordered by that rank.
std::vector<std::vector<std::uint32_t>> nontrivial_cycles(const Permutation& sigma);

/// (tau o sigma)[r] = tau[sigma[r]]. Throws SizeMismatch.
Permutation compose_permutations(const Permutation& tau, const Permutation& sigma);

/// Oracle sign of a polynomial map: permutation_sign(induced_permutation(map)).
Sign oracle_sign(const aut::PolyMap& map, std::uint64_t budget = kDefaultBudget);

}  // namespace tamesign::perm
