#include "tamesign/signcalc.hpp"

#include <algorithm>

#include "tamesign/error.hpp"

namespace tamesign::sign {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_two(const Field& f) { return f.q() == 2; }
bool is_even_non_prime(const Field& f) { return f.p() == 2 && f.m() >= 2; }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "monomial count exceeds 64 bits");
  return out;
}

}  // namespace

int indicator_theta(const Field& field, Elem c) { return c == field.zero() ? 0 : 1; }

std::uint64_t monomial_parity_count(const Field& field, Elem c, std::span<const std::uint32_t> exponents) {
  std::uint64_t m = static_cast<std::uint64_t>(indicator_theta(field, c));
  for (std::uint32_t i = 1; i < field.m(); ++i) m = checked_mul(m, field.p());
  m = checked_mul(m, field.p() - 1);
  for (std::uint32_t e : exponents) m = checked_mul(m, field.q() - (e == 0 ? 0u : 1u));
  return m;
}

Sign sign_elementary(const aut::ElementaryAut& e) {
  if (!is_two(*e.field())) return Sign::plus;
  return perm::sign_of_parity(poly::count_full_support_monomials(e.addend(), e.index()));
}

Sign sign_swap(const Field& field, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::ArityTooSmall, "a swap needs n >= 2");
  if (field.p() == 2) return (field.m() == 1 && n == 2) ? Sign::minus : Sign::plus;
  return perm::sign_of_parity((field.q() - 1) / 2);
}

Sign sign_scale(const Field& field, Elem c) {
  if (c == field.zero()) throw Error(ErrorKind::ZeroElement, "scale constant must be nonzero");
  if (field.p() == 2) return Sign::plus;
  return field.is_square(c) ? Sign::plus : Sign::minus;
}

Sign sign_rowadd(const Field& field, std::size_t n, const aut::RowAdd& r) {
  if (n < 2) throw Error(ErrorKind::ArityTooSmall, "a row addition needs n >= 2");
  // R_{i,j}(c) is E_{cX_j}; only q = 2, n = 2 makes c X_j a full-support monomial.
  if (r.c == field.zero()) throw Error(ErrorKind::ZeroElement, "row addition constant must be nonzero");
  return (is_two(field) && n == 2) ? Sign::minus : Sign::plus;
}

Sign sign_linear_factor(const Field& field, std::size_t n, const LinearFactor& factor) {
  aut::validate(factor, field, n);
  return std::visit(Overloaded{
                        [&](const aut::Swap&) { return sign_swap(field, n); },
                        [&](const aut::Scale& s) { return sign_scale(field, s.c); },
                        [&](const aut::RowAdd& r) { return sign_rowadd(field, n, r); },
                    },
                    factor);
}

Sign sign_translation(const Field& field, std::size_t n, std::span<const Elem> b) {
  const bool nonzero = std::any_of(b.begin(), b.end(), [&](Elem x) { return x != field.zero(); });
  return (is_two(field) && n == 1 && nonzero) ? Sign::minus : Sign::plus;
}

DecompositionSummary summarize(std::vector<LinearFactor> factors) {
  DecompositionSummary out;
  for (const auto& f : factors) {
    std::visit(Overloaded{
                   [&](const aut::Swap&) { ++out.n_swap; },
                   [&](const aut::Scale& s) {
                     ++out.n_scale;
                     out.scale_constants.push_back(s.c);
                   },
                   [&](const aut::RowAdd&) { ++out.n_rowadd; },
               },
               f);
  }
  out.factors = std::move(factors);
  return out;
}

DecompositionSummary decompose_linear(const Field& field, const Matrix& matrix) {
  // Row-reduce M to I with elementary row operations E_k ... E_1 M = I;
  // then M = E_1^{-1} ... E_k^{-1}, so the inverses in order are the factors.
  Matrix m = matrix;
  const std::size_t n = m.size();
  std::vector<LinearFactor> factors;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == field.zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(col, k));
      factors.push_back(aut::Swap{col + 1, pivot + 1});
    }
    const Elem lead = m(col, col);
    if (lead != field.one()) {
      const Elem lead_inv = field.inv(lead);
      for (std::size_t k = 0; k < n; ++k) m(col, k) = field.mul(m(col, k), lead_inv);
      factors.push_back(aut::Scale{col + 1, lead});
    }
    for (std::size_t row = 0; row < n; ++row) {
      const Elem a = m(row, col);
      if (row == col || a == field.zero()) continue;
      for (std::size_t k = 0; k < n; ++k) m(row, k) = field.sub(m(row, k), field.mul(a, m(col, k)));
      factors.push_back(aut::RowAdd{row + 1, col + 1, a});
    }
  }
  return summarize(std::move(factors));
}

Matrix factor_product(const Field& field, std::size_t n, std::span<const LinearFactor> factors) {
  Matrix out = Matrix::identity(n);
  for (const auto& f : factors) out = linalg::multiply(field, out, aut::to_matrix(f, field, n));
  return out;
}

Sign sign_of_factors(const Field& field, std::size_t n, std::span<const LinearFactor> factors) {
  Sign s = Sign::plus;
  for (const auto& f : factors) s = s * sign_linear_factor(field, n, f);
  return s;
}

Sign sign_affine(const aut::AffineAut& a) {
  const auto& field = *a.field();
  const auto decomposition = decompose_linear(field, a.matrix());
  return sign_of_factors(field, a.arity(), decomposition.factors) *
         sign_translation(field, a.arity(), a.translation());
}

Sign sign_affine_by_cases(const aut::AffineAut& a, const DecompositionSummary& decomposition) {
  const auto& field = *a.field();
  const std::size_t n = a.arity();
  const Sign translation = sign_translation(field, n, a.translation());
  if (is_even_non_prime(field)) return translation;
  if (is_two(field)) {
    return n == 2 ? perm::sign_of_parity(decomposition.n_swap + decomposition.n_rowadd) * translation : translation;
  }
  std::uint64_t exponent = ((field.q() - 1) / 2) * decomposition.n_swap;
  for (Elem c : decomposition.scale_constants) exponent += field.log(c);
  return perm::sign_of_parity(exponent) * translation;
}

Sign sign_triangular(const aut::TriangularAut& j) {
  const auto& field = *j.field();
  if (is_even_non_prime(field)) return Sign::plus;
  if (is_two(field)) return perm::sign_of_parity(poly::count_full_support_monomials(j.tails().front(), 1));
  Sign s = Sign::plus;
  for (Elem a : j.diag()) s = s * sign_scale(field, a);
  return s;
}

Sign sign_strictly_triangular(const aut::TriangularAut& j) {
  if (!j.is_strict()) throw Error(ErrorKind::NotStrict, "some diagonal entry differs from 1");
  if (!is_two(*j.field())) return Sign::plus;
  return perm::sign_of_parity(poly::count_full_support_monomials(j.tails().front(), 1));
}

Sign sign_tame_factor(const aut::TameFactor& factor, const Field& field, std::size_t n) {
  return std::visit(Overloaded{
                        [](const aut::AffineAut& a) { return sign_affine(a); },
                        [](const aut::TriangularAut& t) { return sign_triangular(t); },
                        [](const aut::ElementaryAut& e) { return sign_elementary(e); },
                        [&](const LinearFactor& l) { return sign_linear_factor(field, n, l); },
                    },
                    factor);
}

WordSign sign_tame_word(const aut::TameWord& w) {
  WordSign out;
  for (const auto& factor : w.factors()) {
    const Sign s = sign_tame_factor(factor, *w.field(), w.arity());
    out.factors.push_back({std::string(aut::kind_name(factor)), s});
    out.total = out.total * s;
  }
  return out;
}

}  // namespace tamesign::sign
