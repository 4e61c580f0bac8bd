#include "doctest.h"
#include "oracles.hpp"
#include "tamesign/error.hpp"
#include "tamesign/parse.hpp"
#include "tamesign/random.hpp"

using namespace tamesign;
using gf::Elem;

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

}  // namespace

TEST_CASE("classification") {
  const auto f2 = gf::make_field_of_order(2);
  const auto e = text::parse_map("(X1 + X2*X3, X2, X3)", f2, 3);
  CHECK(text::class_name(e) == "elementary");
  REQUIRE(std::holds_alternative<aut::ElementaryAut>(e));
  CHECK(std::get<aut::ElementaryAut>(e).index() == 1);

  const auto f5 = gf::make_field_of_order(5);
  const auto a = text::parse_map("(X3, X2, 2*X1 + X3)", f5, 3);
  CHECK(text::class_name(a) == "affine");
  REQUIRE(std::holds_alternative<aut::AffineAut>(a));
  CHECK(std::get<aut::AffineAut>(a).determinant() == Elem{3});

  const auto f3 = gf::make_field_of_order(3);
  CHECK(text::class_name(text::parse_map("(2*X1 + X2^2, X2 + 1)", f3, 2)) == "triangular");
  CHECK(text::class_name(text::parse_map("(X1 + X2^2, X2 + X1^2*0 + X1^3)", f3, 2)) == "generic");
  CHECK(text::class_name(text::parse_map("(X1, X2)", f3, 2)) == "elementary");
  CHECK(kind_of([&] { text::parse_map("(X1 + X2, 2*X1 + 2*X2)", f3, 2); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("syntax errors carry offsets") {
  const auto f2 = gf::make_field_of_order(2);
  try {
    text::parse_polymap("(X1 + X2^2, X2 +", f2, 2);
    FAIL("expected a syntax error");
  } catch (const text::ParseError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.offset() == 12);
    CHECK(e.position() == 16);
  }
  CHECK(kind_of([&] { text::parse_polymap("X1, X2", f2, 2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { text::parse_polymap("(X1, X2) junk", f2, 2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { text::parse_polynomial("X1 ** 2", f2, 2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { text::parse_word("T(1,2) ; Q(1)", f2, 2); }) == ErrorKind::SyntaxError);
}

TEST_CASE("semantic parse errors") {
  const auto f2 = gf::make_field_of_order(2);
  const auto f4 = gf::make_field_of_order(4);
  CHECK(kind_of([&] { text::parse_polymap("(X1, X3)", f2, 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { text::parse_polynomial("X0", f2, 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { text::parse_polynomial("y + X1", f2, 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { text::parse_polynomial("2*X1", f2, 2); }) == ErrorKind::CoefficientOutOfField);
  CHECK(kind_of([&] { text::parse_polynomial("t*X1", f2, 2); }) == ErrorKind::CoefficientOutOfField);
  CHECK(kind_of([&] { text::parse_polymap("(X1)", f2, 2); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([&] { text::parse_element("X1", f4); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { text::parse_polynomial("(X1 + X2)^65", f2, 2); }) == ErrorKind::SyntaxError);
}

TEST_CASE("extension elements and moduli") {
  const auto f4 = gf::make_field_of_order(4);
  const Elem t = text::parse_element("t", f4);
  CHECK(t == Elem{2});
  CHECK(text::parse_element("t^2", f4) == text::parse_element("t + 1", f4));
  CHECK(text::parse_element("(t+1)*t", f4) == f4->one());
  CHECK(text::format_coefficient(*f4, Elem{3}) == "(t+1)");
  CHECK(text::format_coefficient(*f4, Elem{2}) == "t");
  const auto p = text::parse_prime_poly("t^4 + t + 2", 3);
  CHECK(p == gf::PrimePoly{2, 1, 0, 0, 1});
  CHECK(text::parse_polynomial("t*X1", f4, 1).to_string() == "t*X1");
}

TEST_CASE("word grammar") {
  const auto f3 = gf::make_field_of_order(3);
  CHECK(text::parse_word("", f3, 2).empty());
  CHECK(text::parse_word("id", f3, 2).empty());
  const auto w = text::parse_word("A[0,1;1,0|1,2] ; J[2,1|X2^2,1] ; E[2|X1] ; T(1,2) ; D(1,2) ; R(2,1,1)", f3, 2);
  REQUIRE(w.factors().size() == 6);
  CHECK(aut::kind_name(w.factors()[0]) == "affine");
  CHECK(aut::kind_name(w.factors()[1]) == "triangular");
  CHECK(aut::kind_name(w.factors()[2]) == "elementary");
  CHECK(aut::kind_name(w.factors()[3]) == "swap");
  CHECK(aut::kind_name(w.factors()[4]) == "scale");
  CHECK(aut::kind_name(w.factors()[5]) == "rowadd");
  CHECK(text::serialize(aut::TameWord(f3, 2)) == "id");
  CHECK(kind_of([&] { text::parse_word("D(1,0)", f3, 2); }) == ErrorKind::ZeroElement);
  CHECK(kind_of([&] { text::parse_word("E[1|X1]", f3, 2); }) == ErrorKind::VariableUsed);
  CHECK(kind_of([&] { text::parse_word("J[0,1|X2,1]", f3, 2); }) == ErrorKind::ZeroDiagonal);
  CHECK(kind_of([&] { text::parse_word("A[1,1;1,1|0,0]", f3, 2); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("serialize then parse is the identity on words") {
  gen::Rng rng(40);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u}) {
    const auto f = gf::make_field_of_order(q);
    for (std::size_t n : {1u, 2u, 3u}) {
      for (int k = 0; k < 10; ++k) {
        const auto w = gen::random_tame_word(f, n, rng.below(5), rng);
        const auto text = text::serialize(w);
        const auto back = text::parse_word(text, f, n);
        CHECK(text::serialize(back) == text);
        if (q * q * q <= 4096) CHECK(oracle::image_table(aut::to_polymap(back)) == oracle::image_table(aut::to_polymap(w)));
      }
    }
  }
}

TEST_CASE("map rendering parses back") {
  gen::Rng rng(41);
  for (std::uint64_t q : {2u, 4u, 7u, 9u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 20; ++k) {
      const auto m = aut::to_polymap(gen::random_tame_factor(f, 3, rng), f, 3);
      CHECK(text::parse_polymap(m.to_string(), f, 3) == m);
    }
  }
}
