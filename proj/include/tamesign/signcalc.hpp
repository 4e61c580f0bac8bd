#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tamesign/automorphism.hpp"
#include "tamesign/perm.hpp"

namespace tamesign::sign {

using aut::LinearFactor;
using gf::Elem;
using gf::Field;
using linalg::Matrix;
using perm::Sign;

/// 0 for c = 0, 1 otherwise. Stands in for chi(c)^l.
int indicator_theta(const Field& field, Elem c);

/// Transposition count of the single-monomial elementary map
/// X_i -> X_i + c prod_{j != i} X_j^{e_j}:
///   theta(c) * p^{m-1} * (p - 1) * prod_{j != i} (q - delta(e_j)).
/// `exponents` lists e_j for j != i only. Throws Overflow past 2^64.
std::uint64_t monomial_parity_count(const Field& field, Elem c, std::span<const std::uint32_t> exponents);

/// +1 unless q = 2, where the parity of the number of full-support
/// monomials of the addend decides.
Sign sign_elementary(const aut::ElementaryAut& e);

/// Sign of T_{i,j} on F_q^n. Throws ArityTooSmall for n < 2.
Sign sign_swap(const Field& field, std::size_t n);
/// Sign of D_i(c): quadratic character of c for odd q, +1 for even q.
/// Throws ZeroElement.
Sign sign_scale(const Field& field, Elem c);
/// R_{i,j}(c) = E_{cX_j}, so the elementary rule applies: +1 except for
/// q = 2, n = 2, where X_j is a full-support monomial and the sign is -1.
/// Throws ArityTooSmall for n < 2.
Sign sign_rowadd(const Field& field, std::size_t n, const aut::RowAdd& factor);
Sign sign_linear_factor(const Field& field, std::size_t n, const LinearFactor& factor);

/// Sign of x -> x + b on F_q^n: a product of q^n/p disjoint p-cycles, odd
/// only when q = 2, n = 1 and b != 0.
Sign sign_translation(const Field& field, std::size_t n, std::span<const Elem> b);

struct DecompositionSummary {
  /// Outermost first: the matrix equals factors[0] * factors[1] * ...
  std::vector<LinearFactor> factors;
  std::size_t n_swap = 0;
  std::size_t n_scale = 0;
  std::size_t n_rowadd = 0;
  std::vector<Elem> scale_constants;
};

/// Counts for an arbitrary factor list.
DecompositionSummary summarize(std::vector<LinearFactor> factors);

/// Gaussian elimination into swap / scale / row-add factors.
/// Throws SingularMatrix.
DecompositionSummary decompose_linear(const Field& field, const Matrix& matrix);

/// factors[0] * factors[1] * ... as an n x n matrix.
Matrix factor_product(const Field& field, std::size_t n, std::span<const LinearFactor> factors);

/// Product of the per-factor signs.
Sign sign_of_factors(const Field& field, std::size_t n, std::span<const LinearFactor> factors);

/// Affine sign through the factor product of decompose_linear (the
/// translation only matters for q = 2, n = 1).
Sign sign_affine(const aut::AffineAut& a);

/// The same sign from the closed-form cases on the decomposition counts:
/// +1 for q = 2^m (m >= 2) and for q = 2, n >= 3; (-1)^{N_T + N_R} for
/// q = 2, n = 2; (-1)^{sum h(c_j) + (q-1)/2 N_T} for odd q, h the discrete log.
Sign sign_affine_by_cases(const aut::AffineAut& a, const DecompositionSummary& decomposition);

Sign sign_triangular(const aut::TriangularAut& j);
/// Throws NotStrict unless every diagonal entry is 1.
Sign sign_strictly_triangular(const aut::TriangularAut& j);

struct FactorSign {
  std::string kind;
  Sign sign;
};

struct WordSign {
  Sign total = Sign::plus;
  std::vector<FactorSign> factors;
};

Sign sign_tame_factor(const aut::TameFactor& factor, const Field& field, std::size_t n);
/// Product of per-factor formula signs; never composes the word.
WordSign sign_tame_word(const aut::TameWord& w);

}  // namespace tamesign::sign
