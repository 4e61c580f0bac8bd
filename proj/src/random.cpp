#include "tamesign/random.hpp"

#include <numeric>

#include "tamesign/error.hpp"

namespace tamesign::gen {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::size_t> vars_after(std::size_t i, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = i + 1; k <= n; ++k) out.push_back(k);
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix(base);
  for (std::uint64_t x : path) h = splitmix(h ^ splitmix(x));
  return h;
}

Elem random_element(const gf::Field& field, Rng& rng) { return Elem{static_cast<std::uint32_t>(rng.below(field.q()))}; }

Elem random_nonzero(const gf::Field& field, Rng& rng) {
  return Elem{static_cast<std::uint32_t>(1 + rng.below(field.q() - 1))};
}

Polynomial random_polynomial(const FieldPtr& field, std::size_t n, std::span<const std::size_t> vars,
                             const PolyShape& shape, Rng& rng) {
  Polynomial out = Polynomial::zero(field, n);
  const std::size_t terms = rng.between(0, shape.max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    poly::Monomial m{std::vector<std::uint32_t>(n, 0)};
    for (std::size_t v : vars) m.exponents[v - 1] = static_cast<std::uint32_t>(rng.below(shape.max_exponent + 1));
    out.add_term(m, random_nonzero(*field, rng));
  }
  return out;
}

aut::ElementaryAut random_elementary(const FieldPtr& field, std::size_t n, Rng& rng, const PolyShape& shape) {
  const std::size_t index = 1 + rng.below(n);
  std::vector<std::size_t> vars;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k != index) vars.push_back(k);
  }
  return aut::ElementaryAut::make(index, random_polynomial(field, n, vars, shape, rng));
}

aut::LinearFactor random_linear_factor(const gf::Field& field, std::size_t n, Rng& rng) {
  const std::uint64_t kind = n >= 2 ? rng.below(3) : 1;
  const std::size_t i = 1 + rng.below(n);
  std::size_t j = i;
  if (n >= 2) {
    j = 1 + rng.below(n - 1);
    if (j >= i) ++j;
  }
  switch (kind) {
    case 0:
      return aut::Swap{std::min(i, j), std::max(i, j)};
    case 1:
      return aut::Scale{i, random_nonzero(field, rng)};
    default:
      return aut::RowAdd{i, j, random_nonzero(field, rng)};
  }
}

linalg::Matrix random_invertible_matrix(const gf::Field& field, std::size_t n, Rng& rng) {
  for (;;) {
    linalg::Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_element(field, rng);
    }
    if (linalg::determinant(field, m) != field.zero()) return m;
  }
}

aut::AffineAut random_affine(const FieldPtr& field, std::size_t n, Rng& rng) {
  linalg::Matrix m = random_invertible_matrix(*field, n, rng);
  std::vector<Elem> b(n);
  for (auto& x : b) x = random_element(*field, rng);
  return aut::AffineAut::make(field, std::move(m), std::move(b));
}

aut::TriangularAut random_triangular(const FieldPtr& field, std::size_t n, Rng& rng, const PolyShape& shape) {
  std::vector<Elem> diag(n);
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    diag[i - 1] = random_nonzero(*field, rng);
    const auto vars = vars_after(i, n);
    tails.push_back(random_polynomial(field, n, vars, shape, rng));
  }
  return aut::TriangularAut::make(field, std::move(diag), std::move(tails));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::elementary:
      return "elementary";
    case Family::linear:
      return "linear";
    case Family::affine:
      return "affine";
    case Family::triangular:
      return "triangular";
    case Family::tame:
      return "tame";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorKind::Usage, "unknown family '" + std::string(name) +
                                    "' (expected elementary, linear, affine, triangular, tame or all)");
}

std::vector<Family> all_families() {
  return {Family::elementary, Family::linear, Family::affine, Family::triangular, Family::tame};
}

TameFactor random_tame_factor(const FieldPtr& field, std::size_t n, Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return random_affine(field, n, rng);
    case 1:
      return random_triangular(field, n, rng);
    case 2:
      return random_elementary(field, n, rng);
    default:
      return random_linear_factor(*field, n, rng);
  }
}

aut::TameWord random_tame_word(const FieldPtr& field, std::size_t n, std::size_t length, Rng& rng) {
  std::vector<TameFactor> factors;
  factors.reserve(length);
  for (std::size_t k = 0; k < length; ++k) factors.push_back(random_tame_factor(field, n, rng));
  return aut::TameWord(field, n, std::move(factors));
}

perm::Permutation random_permutation(std::size_t size, Rng& rng) {
  std::vector<std::uint32_t> images(size);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t k = size; k > 1; --k) std::swap(images[k - 1], images[rng.below(k)]);
  return perm::Permutation(std::move(images));
}

}  // namespace tamesign::gen
