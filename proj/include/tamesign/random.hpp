#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "tamesign/automorphism.hpp"
#include "tamesign/perm.hpp"

namespace tamesign::gen {

using aut::TameFactor;
using gf::Elem;
using gf::FieldPtr;
using poly::Polynomial;

/// Seeded stream. Bounded draws use rejection on the raw 64-bit output so
/// the sequence depends only on the seed, not on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic per-instance seed derived from a base seed and a path.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

struct PolyShape {
  std::size_t max_terms = 3;
  std::uint32_t max_exponent = 3;
};

Elem random_element(const gf::Field& field, Rng& rng);
Elem random_nonzero(const gf::Field& field, Rng& rng);

/// Random polynomial in n variables whose monomials only involve `vars`
/// (1-based). Each term has a nonzero coefficient; terms may collide.
Polynomial random_polynomial(const FieldPtr& field, std::size_t n, std::span<const std::size_t> vars,
                             const PolyShape& shape, Rng& rng);

aut::ElementaryAut random_elementary(const FieldPtr& field, std::size_t n, Rng& rng, const PolyShape& shape = {});
/// Requires n >= 2 for swaps and row additions; n = 1 yields scales.
aut::LinearFactor random_linear_factor(const gf::Field& field, std::size_t n, Rng& rng);
/// Uniform entries with rejection of singular draws.
linalg::Matrix random_invertible_matrix(const gf::Field& field, std::size_t n, Rng& rng);
aut::AffineAut random_affine(const FieldPtr& field, std::size_t n, Rng& rng);
aut::TriangularAut random_triangular(const FieldPtr& field, std::size_t n, Rng& rng, const PolyShape& shape = {});

enum class Family { elementary, linear, affine, triangular, tame };

std::string_view family_name(Family f);
/// Throws Usage for unknown names.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

/// One factor drawn from the affine / triangular / elementary mix (plus
/// linear factors when n >= 2).
TameFactor random_tame_factor(const FieldPtr& field, std::size_t n, Rng& rng);
aut::TameWord random_tame_word(const FieldPtr& field, std::size_t n, std::size_t length, Rng& rng);

/// Uniformly random permutation of [0, size).
perm::Permutation random_permutation(std::size_t size, Rng& rng);

}  // namespace tamesign::gen
