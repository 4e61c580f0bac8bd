#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tamesign/automorphism.hpp"
#include "tamesign/error.hpp"

namespace tamesign::text {

using aut::PolyMap;
using gf::Elem;
using gf::FieldPtr;
using poly::Polynomial;

/// Syntax error with the offset of the enclosing component (map entry or
/// word factor) and the exact offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::size_t position, const std::string& detail);

  std::size_t offset() const noexcept { return offset_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t offset_;
  std::size_t position_;
};

/// Prime-field polynomial in t, e.g. "t^2+t+1", for --modulus.
gf::PrimePoly parse_prime_poly(std::string_view text, std::uint32_t p);

/// Constant expression in t, e.g. "t+1", "2", "(t^2+1)*t".
Elem parse_element(std::string_view text, const FieldPtr& field);

Polynomial parse_polynomial(std::string_view text, const FieldPtr& field, std::size_t n);

/// "(f_1, ..., f_n)". Throws ParseError (SyntaxError), UnknownVariable,
/// CoefficientOutOfField, ArityMismatch when the tuple has the wrong length.
PolyMap parse_polymap(std::string_view text, const FieldPtr& field, std::size_t n);

struct GenericMap {
  PolyMap map;
};

/// Most specific class first.
using Classified = std::variant<aut::ElementaryAut, aut::AffineAut, aut::TriangularAut, GenericMap>;

/// The affine automorphism behind a map of degree <= 1, nullopt for higher
/// degree. Throws SingularMatrix.
std::optional<aut::AffineAut> affine_form(const PolyMap& map);

/// Elementary, then affine, then triangular, otherwise generic. The identity
/// classifies as E_0 on coordinate 1.
Classified classify(const PolyMap& map);
std::string_view class_name(const Classified& c);

/// parse_polymap followed by classify.
Classified parse_map(std::string_view text, const FieldPtr& field, std::size_t n);

/// Factors separated by ';': A[rows|b], J[diag|tails], E[i|poly], T(i,j),
/// D(i,c), R(i,j,c). Empty text or "id" is the identity word.
aut::TameWord parse_word(std::string_view text, const FieldPtr& field, std::size_t n);

/// Coefficient as written in the grammar: multi-term values are parenthesized.
std::string format_coefficient(const gf::Field& field, Elem c);

std::string serialize(const aut::TameFactor& factor, const gf::Field& field, std::size_t n);
/// Inverse of parse_word; the identity word serializes as "id".
std::string serialize(const aut::TameWord& word);

}  // namespace tamesign::text
