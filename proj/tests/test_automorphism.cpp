#include "doctest.h"
#include "oracles.hpp"
#include "tamesign/automorphism.hpp"
#include "tamesign/error.hpp"
#include "tamesign/parse.hpp"
#include "tamesign/random.hpp"

using namespace tamesign;
using aut::PolyMap;
using gf::Elem;
using poly::Polynomial;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

Polynomial P(const gf::FieldPtr& f, std::size_t n, std::string_view text) { return text::parse_polynomial(text, f, n); }

bool is_identity_function(const PolyMap& m) {
  const auto table = oracle::image_table(m);
  for (std::uint32_t r = 0; r < table.size(); ++r) {
    if (table[r] != r) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("composition is F(G(x))") {
  gen::Rng rng(21);
  for (std::uint64_t q : {2u, 3u, 4u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 20; ++k) {
      const auto F = aut::to_polymap(gen::random_tame_factor(f, 2, rng), f, 2);
      const auto G = aut::to_polymap(gen::random_tame_factor(f, 2, rng), f, 2);
      const auto FG = aut::compose(F, G);
      const auto tf = oracle::image_table(F);
      const auto tg = oracle::image_table(G);
      const auto tfg = oracle::image_table(FG);
      for (std::size_t r = 0; r < tfg.size(); ++r) CHECK(tfg[r] == tf[tg[r]]);
    }
  }
}

TEST_CASE("elementary automorphism shape and inverse") {
  const auto f = gf::make_field_of_order(2);
  const auto e = aut::ElementaryAut::make(1, P(f, 3, "X2*X3"));
  CHECK(aut::to_polymap(e).to_string() == "(X2*X3 + X1, X2, X3)");
  CHECK(aut::compose(aut::to_polymap(e), aut::to_polymap(aut::inverse(e))).is_identity());
  CHECK(kind_of([&] { aut::ElementaryAut::make(2, P(f, 3, "X2*X3")); }) == ErrorKind::VariableUsed);
  CHECK(kind_of([&] { aut::ElementaryAut::make(4, P(f, 3, "X2")); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("affine inverse is exact") {
  gen::Rng rng(8);
  for (std::uint64_t q : {2u, 3u, 5u, 4u, 9u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 10; ++k) {
      const auto a = gen::random_affine(f, 3, rng);
      CHECK(aut::compose(aut::to_polymap(a), aut::to_polymap(aut::inverse(a))).is_identity());
      CHECK(aut::compose(aut::to_polymap(aut::inverse(a)), aut::to_polymap(a)).is_identity());
      CHECK(a.determinant() == linalg::determinant(*f, a.matrix()));
    }
  }
}

TEST_CASE("triangular inverse by back-substitution") {
  gen::Rng rng(9);
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 10; ++k) {
      const auto j = gen::random_triangular(f, 3, rng);
      const auto ji = aut::inverse(j);
      CHECK(aut::compose(aut::to_polymap(j), aut::to_polymap(ji)).is_identity());
      CHECK(is_identity_function(aut::compose(aut::to_polymap(ji), aut::to_polymap(j))));
    }
  }
}

TEST_CASE("triangular validation") {
  const auto f = gf::make_field_of_order(3);
  const std::vector<Polynomial> tails{P(f, 2, "X2^2"), P(f, 2, "1")};
  CHECK_NOTHROW(aut::TriangularAut::make(f, {Elem{2}, Elem{1}}, tails));
  CHECK(kind_of([&] { aut::TriangularAut::make(f, {Elem{0}, Elem{1}}, tails); }) == ErrorKind::ZeroDiagonal);
  const std::vector<Polynomial> bad{P(f, 2, "X2"), P(f, 2, "X2")};
  CHECK(kind_of([&] { aut::TriangularAut::make(f, {Elem{1}, Elem{1}}, bad); }) == ErrorKind::TailUsesEarlyVariable);
  CHECK(aut::TriangularAut::make(f, {Elem{1}, Elem{1}}, tails).is_strict());
  CHECK_FALSE(aut::TriangularAut::make(f, {Elem{2}, Elem{1}}, tails).is_strict());
}

TEST_CASE("linear factors: matrix, map and inverse agree") {
  const auto f = gf::make_field_of_order(5);
  const std::vector<aut::LinearFactor> factors{aut::Swap{1, 3}, aut::Scale{2, Elem{3}}, aut::RowAdd{3, 1, Elem{4}}};
  for (const auto& l : factors) {
    const auto m = aut::to_matrix(l, *f, 3);
    const auto as_affine = aut::to_polymap(aut::AffineAut::make(f, m, std::vector<Elem>(3)));
    CHECK(as_affine == aut::to_polymap(l, f, 3));
    const auto inv = aut::inverse(l, *f);
    CHECK(linalg::multiply(*f, m, aut::to_matrix(inv, *f, 3)) == linalg::Matrix::identity(3));
  }
  CHECK(aut::to_string(factors[0], *f) == "T(1,3)");
  CHECK(aut::to_string(factors[1], *f) == "D(2,3)");
  CHECK(aut::to_string(factors[2], *f) == "R(3,1,4)");
  CHECK(aut::to_polymap(factors[2], f, 3).to_string() == "(X1, X2, 4*X1 + X3)");
}

TEST_CASE("linear factor validation") {
  const auto f = gf::make_field_of_order(3);
  CHECK(kind_of([&] { aut::validate(aut::Swap{1, 1}, *f, 2); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { aut::validate(aut::Swap{1, 3}, *f, 2); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { aut::validate(aut::Scale{1, Elem{0}}, *f, 2); }) == ErrorKind::ZeroElement);
  CHECK(kind_of([&] { aut::validate(aut::RowAdd{1, 2, Elem{0}}, *f, 2); }) == ErrorKind::ZeroElement);
}

TEST_CASE("affine validation") {
  const auto f = gf::make_field_of_order(3);
  linalg::Matrix m(2, {Elem{1}, Elem{2}, Elem{2}, Elem{1}});  // det = 1 - 4 = 0 mod 3
  CHECK(kind_of([&] { aut::AffineAut::make(f, m, {Elem{0}, Elem{0}}); }) == ErrorKind::SingularMatrix);
  CHECK(kind_of([&] { aut::AffineAut::make(f, linalg::Matrix::identity(2), {Elem{0}}); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("tame word composes outermost first") {
  const auto f = gf::make_field_of_order(3);
  // T(1,2) o D(1,2): x -> D first, then swap: (X1, X2) -> (2X1, X2) -> (X2, 2X1)
  const aut::TameWord w(f, 2, {aut::LinearFactor{aut::Swap{1, 2}}, aut::LinearFactor{aut::Scale{1, Elem{2}}}});
  CHECK(aut::to_polymap(w).to_string() == "(X2, 2*X1)");
  CHECK(aut::to_polymap(aut::TameWord(f, 2)).is_identity());
  CHECK(aut::kind_name(w.factors()[0]) == "swap");
  CHECK(aut::kind_name(w.factors()[1]) == "scale");
}

TEST_CASE("tame word validation") {
  const auto f = gf::make_field_of_order(3);
  const auto g = gf::make_field_of_order(5);
  const auto e = aut::ElementaryAut::make(1, P(g, 2, "X2"));
  CHECK_THROWS_AS(aut::TameWord(f, 2, {e}), Error);
  const auto e3 = aut::ElementaryAut::make(1, P(f, 3, "X2"));
  CHECK(kind_of([&] { aut::TameWord(f, 2, {e3}); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { aut::TameWord(f, 2, {aut::LinearFactor{aut::Swap{1, 5}}}); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("map validation") {
  const auto f = gf::make_field_of_order(2);
  CHECK(kind_of([&] { PolyMap(f, {P(f, 2, "X1"), P(f, 3, "X2")}); }) == ErrorKind::ArityMismatch);
  const PolyMap id = PolyMap::identity(f, 3);
  CHECK(id.is_identity());
  CHECK(id.degree() == 1);
  CHECK(id.to_string() == "(X1, X2, X3)");
}
