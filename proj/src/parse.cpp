#include "tamesign/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace tamesign::text {

using linalg::Matrix;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Largest exponent accepted on a parenthesized non-constant subexpression.
constexpr std::uint64_t kMaxGroupPower = 64;

class Parser {
 public:
  // n = 0 parses constants only. With t_is_variable, `t` reads as X1 of a
  // one-variable ring (used for moduli over F_p).
  Parser(std::string_view text, FieldPtr field, std::size_t n, bool t_is_variable = false)
      : s_(text), field_(std::move(field)), n_(n), t_is_variable_(t_is_variable) {}

  std::size_t pos() const noexcept { return pos_; }
  void mark_component() {
    skip_ws();
    component_ = pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'" + found());
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(component_, pos_, what); }

  std::string found() const {
    if (pos_ >= s_.size()) return " at end of input";
    return std::string(" but found '") + s_[pos_] + "'";
  }

  std::uint64_t nat() {
    skip_ws();
    const std::size_t begin = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == begin) fail("expected a number" + found());
    return v;
  }

  // poly := ["+"|"-"] term { ("+"|"-") term }
  Polynomial sum() {
    Polynomial out = Polynomial::zero(field_, ring_arity());
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    for (;;) {
      Polynomial term = product();
      out = negate ? out - term : out + term;
      const char c = peek();
      if (c != '+' && c != '-') return out;
      ++pos_;
      negate = c == '-';
    }
  }

  // term := factor { "*" factor }
  Polynomial product() {
    Polynomial out = factor();
    while (eat('*')) out = out * factor();
    return out;
  }

  // factor := integer | t ["^" nat] | X nat ["^" nat] | "(" poly ")" ["^" nat]
  Polynomial factor() {
    const char c = peek();
    const std::size_t begin = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = nat();
      if (v >= field_->p()) {
        throw Error(ErrorKind::CoefficientOutOfField, "integer " + std::to_string(v) + " at offset " +
                                                          std::to_string(begin) + " is not below p = " +
                                                          std::to_string(field_->p()));
      }
      return constant(field_->from_int(static_cast<std::int64_t>(v)));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      expect(')');
      if (!eat('^')) return inner;
      const std::uint64_t e = nat();
      if (inner.degree() == 0) return constant(field_->pow(inner.constant_term(), e));
      if (e > kMaxGroupPower) fail("exponent " + std::to_string(e) + " on a parenthesized polynomial exceeds 64");
      return inner.pow(static_cast<std::uint32_t>(e));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string_view word = s_.substr(pos_, end - pos_);
      if (word == "t") {
        pos_ = end;
        const std::uint64_t e = eat('^') ? nat() : 1;
        if (t_is_variable_) return variable(1, e);
        if (field_->m() == 1) {
          throw Error(ErrorKind::CoefficientOutOfField,
                      "t at offset " + std::to_string(begin) + " in the prime field F_" + std::to_string(field_->p()));
        }
        return constant(field_->pow(field_->t(), e));
      }
      if (word == "X" && end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) {
        pos_ = end;
        const std::uint64_t i = nat();
        if (t_is_variable_ || i < 1 || i > n_) {
          throw Error(ErrorKind::UnknownVariable, "X" + std::to_string(i) + " at offset " + std::to_string(begin) +
                                                      " (variables are X1..X" + std::to_string(n_) + ")");
        }
        const std::uint64_t e = eat('^') ? nat() : 1;
        return variable(i, e);
      }
      throw Error(ErrorKind::UnknownVariable,
                  "'" + std::string(word) + "' at offset " + std::to_string(begin) + " is not a variable");
    }
    fail("expected a term" + found());
  }

  // A constant expression in t.
  Elem element() {
    const std::size_t begin = pos_;
    const Polynomial f = sum();
    if (f.degree() > 0) throw ParseError(component_, begin, "expected a constant, not a polynomial in X");
    return f.constant_term();
  }

 private:
  std::size_t ring_arity() const noexcept { return t_is_variable_ ? 1 : n_; }

  Polynomial constant(Elem c) const { return Polynomial::constant(field_, ring_arity(), c); }

  Polynomial variable(std::size_t i, std::uint64_t e) const {
    std::vector<std::uint32_t> exps(ring_arity(), 0);
    exps[i - 1] = static_cast<std::uint32_t>(e);
    return Polynomial::monomial(field_, ring_arity(), field_->one(), std::move(exps));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t component_ = 0;
  FieldPtr field_;
  std::size_t n_;
  bool t_is_variable_;
};

std::vector<Elem> element_list(Parser& in) {
  std::vector<Elem> out;
  do {
    out.push_back(in.element());
  } while (in.eat(','));
  return out;
}

void require_length(std::size_t got, std::size_t n, const char* what) {
  if (got != n) {
    throw Error(ErrorKind::ArityMismatch,
                std::string(what) + " has " + std::to_string(got) + " entries, expected " + std::to_string(n));
  }
}

aut::TameFactor word_factor(Parser& in, const FieldPtr& field, std::size_t n) {
  const char c = in.peek();
  if (c == '\0') in.fail("expected a factor" + in.found());
  in.eat(c);
  switch (c) {
    case 'A': {
      in.expect('[');
      std::vector<Elem> entries;
      std::size_t rows = 0;
      do {
        const auto row = element_list(in);
        require_length(row.size(), n, "matrix row");
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
      } while (in.eat(';'));
      require_length(rows, n, "matrix");
      in.expect('|');
      auto b = element_list(in);
      require_length(b.size(), n, "translation");
      in.expect(']');
      return aut::AffineAut::make(field, Matrix(n, std::move(entries)), std::move(b));
    }
    case 'J': {
      in.expect('[');
      auto diag = element_list(in);
      require_length(diag.size(), n, "diagonal");
      in.expect('|');
      std::vector<Polynomial> tails;
      do {
        tails.push_back(in.sum());
      } while (in.eat(','));
      require_length(tails.size(), n, "tail list");
      in.expect(']');
      return aut::TriangularAut::make(field, std::move(diag), std::move(tails));
    }
    case 'E': {
      in.expect('[');
      const std::uint64_t i = in.nat();
      in.expect('|');
      Polynomial a = in.sum();
      in.expect(']');
      return aut::ElementaryAut::make(i, std::move(a));
    }
    case 'T': {
      in.expect('(');
      const std::uint64_t i = in.nat();
      in.expect(',');
      const std::uint64_t j = in.nat();
      in.expect(')');
      return aut::LinearFactor{aut::Swap{i, j}};
    }
    case 'D': {
      in.expect('(');
      const std::uint64_t i = in.nat();
      in.expect(',');
      const Elem k = in.element();
      in.expect(')');
      return aut::LinearFactor{aut::Scale{i, k}};
    }
    case 'R': {
      in.expect('(');
      const std::uint64_t i = in.nat();
      in.expect(',');
      const std::uint64_t j = in.nat();
      in.expect(',');
      const Elem k = in.element();
      in.expect(')');
      return aut::LinearFactor{aut::RowAdd{i, j, k}};
    }
    default:
      in.fail(std::string("unknown factor '") + c + "' (expected A, J, E, T, D or R)");
  }
}

std::string join_elements(const gf::Field& field, std::span<const Elem> xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ',';
    out += format_coefficient(field, xs[k]);
  }
  return out;
}

std::optional<aut::ElementaryAut> as_elementary(const PolyMap& map) {
  const std::size_t n = map.arity();
  const auto& field = map.field();
  std::size_t index = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (map.component(i) == Polynomial::variable(field, n, i)) continue;
    if (index != 0) return std::nullopt;
    index = i;
  }
  if (index == 0) return aut::ElementaryAut::make(1, Polynomial::zero(field, n));
  Polynomial addend = map.component(index) - Polynomial::variable(field, n, index);
  if (addend.uses_variable(index)) return std::nullopt;
  return aut::ElementaryAut::make(index, std::move(addend));
}

}  // namespace

std::optional<aut::AffineAut> affine_form(const PolyMap& map) {
  const std::size_t n = map.arity();
  for (const auto& f : map.components()) {
    if (!f.is_affine_linear()) return std::nullopt;
  }
  Matrix m(n);
  std::vector<Elem> b(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& f = map.components()[r];
    for (std::size_t c = 0; c < n; ++c) m(r, c) = f.linear_coefficient(c + 1);
    b[r] = f.constant_term();
  }
  return aut::AffineAut::make(map.field(), std::move(m), std::move(b));
}

namespace {

std::optional<aut::TriangularAut> as_triangular(const PolyMap& map) {
  const std::size_t n = map.arity();
  const auto& field = map.field();
  std::vector<Elem> diag;
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = map.component(i);
    const Elem a = f.linear_coefficient(i);
    if (a == field->zero()) return std::nullopt;
    Polynomial tail = f - Polynomial::variable(field, n, i).scaled(a);
    for (std::size_t k = 1; k <= i; ++k) {
      if (tail.uses_variable(k)) return std::nullopt;
    }
    diag.push_back(a);
    tails.push_back(std::move(tail));
  }
  return aut::TriangularAut::make(field, std::move(diag), std::move(tails));
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::size_t position, const std::string& detail)
    : Error(ErrorKind::SyntaxError,
            "at offset " + std::to_string(offset) + ": " + detail + " (position " + std::to_string(position) + ")"),
      offset_(offset),
      position_(position) {}

gf::PrimePoly parse_prime_poly(std::string_view text, std::uint32_t p) {
  const FieldPtr prime = gf::make_field(p, 1);
  Parser in(text, prime, 0, true);
  const Polynomial f = in.sum();
  in.expect_end();
  gf::PrimePoly out(f.degree() + 1, 0);
  for (const auto& [mono, c] : f.terms()) out[mono.exponents[0]] = prime->rank(c);
  return out;
}

Elem parse_element(std::string_view text, const FieldPtr& field) {
  Parser in(text, field, 0);
  const Elem e = in.element();
  in.expect_end();
  return e;
}

Polynomial parse_polynomial(std::string_view text, const FieldPtr& field, std::size_t n) {
  Parser in(text, field, n);
  Polynomial f = in.sum();
  in.expect_end();
  return f;
}

PolyMap parse_polymap(std::string_view text, const FieldPtr& field, std::size_t n) {
  Parser in(text, field, n);
  in.expect('(');
  std::vector<Polynomial> comps;
  do {
    in.mark_component();
    comps.push_back(in.sum());
  } while (in.eat(','));
  in.expect(')');
  in.expect_end();
  require_length(comps.size(), n, "map");
  return PolyMap(field, std::move(comps));
}

Classified classify(const PolyMap& map) {
  if (auto e = as_elementary(map)) return *std::move(e);
  if (auto a = affine_form(map)) return *std::move(a);
  if (auto j = as_triangular(map)) return *std::move(j);
  return GenericMap{map};
}

std::string_view class_name(const Classified& c) {
  return std::visit(Overloaded{
                        [](const aut::ElementaryAut&) { return std::string_view("elementary"); },
                        [](const aut::AffineAut&) { return std::string_view("affine"); },
                        [](const aut::TriangularAut&) { return std::string_view("triangular"); },
                        [](const GenericMap&) { return std::string_view("generic"); },
                    },
                    c);
}

Classified parse_map(std::string_view text, const FieldPtr& field, std::size_t n) {
  return classify(parse_polymap(text, field, n));
}

aut::TameWord parse_word(std::string_view text, const FieldPtr& field, std::size_t n) {
  Parser in(text, field, n);
  if (in.at_end()) return aut::TameWord(field, n);
  if (in.peek() == 'i') {
    in.eat('i');
    in.expect('d');
    in.expect_end();
    return aut::TameWord(field, n);
  }
  std::vector<aut::TameFactor> factors;
  do {
    in.mark_component();
    factors.push_back(word_factor(in, field, n));
  } while (in.eat(';'));
  in.expect_end();
  return aut::TameWord(field, n, std::move(factors));
}

std::string format_coefficient(const gf::Field& field, Elem c) {
  std::string s = field.format(c);
  return field.m() > 1 && s.find('+') != std::string::npos ? '(' + s + ')' : s;
}

std::string serialize(const aut::TameFactor& factor, const gf::Field& field, std::size_t n) {
  return std::visit(Overloaded{
                        [&](const aut::AffineAut& a) {
                          std::string out = "A[";
                          for (std::size_t r = 0; r < n; ++r) {
                            if (r > 0) out += ';';
                            out += join_elements(field, a.matrix().row_major().subspan(r * n, n));
                          }
                          return out + '|' + join_elements(field, a.translation()) + ']';
                        },
                        [&](const aut::TriangularAut& j) {
                          std::string out = "J[" + join_elements(field, j.diag()) + '|';
                          for (std::size_t i = 0; i < n; ++i) {
                            if (i > 0) out += ',';
                            out += j.tails()[i].to_string();
                          }
                          return out + ']';
                        },
                        [&](const aut::ElementaryAut& e) {
                          return "E[" + std::to_string(e.index()) + '|' + e.addend().to_string() + ']';
                        },
                        [&](const aut::LinearFactor& l) { return aut::to_string(l, field); },
                    },
                    factor);
}

std::string serialize(const aut::TameWord& word) {
  if (word.empty()) return "id";
  std::string out;
  for (const auto& f : word.factors()) {
    if (!out.empty()) out += " ; ";
    out += serialize(f, *word.field(), word.arity());
  }
  return out;
}

}  // namespace tamesign::text
