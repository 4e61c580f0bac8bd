#include "tamesign/automorphism.hpp"

#include "tamesign/error.hpp"

namespace tamesign::aut {

namespace {

void require_same_field(const gf::Field& a, const gf::Field& b, const char* what) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, what);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

PolyMap::PolyMap(FieldPtr field, std::vector<Polynomial> components)
    : field_(std::move(field)), components_(std::move(components)) {
  for (const auto& f : components_) {
    require_same_field(*f.field(), *field_, "map component over another field");
    if (f.arity() != components_.size()) {
      throw Error(ErrorKind::ArityMismatch, "component arity " + std::to_string(f.arity()) + " in a map of " +
                                                std::to_string(components_.size()) + " components");
    }
  }
}

PolyMap PolyMap::identity(FieldPtr field, std::size_t n) {
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) comps.push_back(Polynomial::variable(field, n, i));
  return PolyMap(std::move(field), std::move(comps));
}

std::vector<Elem> PolyMap::apply(std::span<const Elem> point) const {
  std::vector<Elem> out;
  out.reserve(components_.size());
  for (const auto& f : components_) out.push_back(f.evaluate(point));
  return out;
}

std::uint64_t PolyMap::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& f : components_) d = std::max(d, f.degree());
  return d;
}

bool PolyMap::is_identity() const { return *this == identity(field_, arity()); }

bool PolyMap::operator==(const PolyMap& other) const {
  return *field_ == *other.field_ && components_ == other.components_;
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  require_same_field(*outer.field(), *inner.field(), "composing maps over different fields");
  if (outer.arity() != inner.arity()) throw Error(ErrorKind::ArityMismatch, "composing maps of different arity");
  std::vector<Polynomial> comps;
  comps.reserve(outer.arity());
  for (const auto& f : outer.components()) comps.push_back(f.substitute(inner.components()));
  return PolyMap(outer.field(), std::move(comps));
}

ElementaryAut ElementaryAut::make(std::size_t index, Polynomial addend) {
  if (index < 1 || index > addend.arity()) {
    throw Error(ErrorKind::ArityMismatch,
                "coordinate " + std::to_string(index) + " outside 1.." + std::to_string(addend.arity()));
  }
  if (addend.uses_variable(index)) {
    throw Error(ErrorKind::VariableUsed, "elementary addend uses X" + std::to_string(index));
  }
  return ElementaryAut(index, std::move(addend));
}

void validate(const LinearFactor& factor, const gf::Field& field, std::size_t n) {
  auto check_index = [n](std::size_t i) {
    if (i < 1 || i > n) {
      throw Error(ErrorKind::ArityMismatch, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
  };
  auto check_nonzero = [&field](Elem c) {
    if (!field.contains(c)) throw Error(ErrorKind::FieldMismatch, "constant outside the field");
    if (c == field.zero()) throw Error(ErrorKind::ZeroElement, "linear factor constant must be nonzero");
  };
  std::visit(Overloaded{
                 [&](const Swap& s) {
                   check_index(s.i);
                   check_index(s.j);
                   if (s.i == s.j) throw Error(ErrorKind::ArityMismatch, "swap needs i != j");
                 },
                 [&](const Scale& s) {
                   check_index(s.i);
                   check_nonzero(s.c);
                 },
                 [&](const RowAdd& r) {
                   check_index(r.i);
                   check_index(r.j);
                   if (r.i == r.j) throw Error(ErrorKind::ArityMismatch, "row addition needs i != j");
                   check_nonzero(r.c);
                 },
             },
             factor);
}

Matrix to_matrix(const LinearFactor& factor, const gf::Field& field, std::size_t n) {
  validate(factor, field, n);
  Matrix m = Matrix::identity(n);
  std::visit(Overloaded{
                 [&](const Swap& s) {
                   m(s.i - 1, s.i - 1) = field.zero();
                   m(s.j - 1, s.j - 1) = field.zero();
                   m(s.i - 1, s.j - 1) = field.one();
                   m(s.j - 1, s.i - 1) = field.one();
                 },
                 [&](const Scale& s) { m(s.i - 1, s.i - 1) = s.c; },
                 [&](const RowAdd& r) { m(r.i - 1, r.j - 1) = r.c; },
             },
             factor);
  return m;
}

LinearFactor inverse(const LinearFactor& factor, const gf::Field& field) {
  return std::visit(Overloaded{
                        [](const Swap& s) -> LinearFactor { return s; },
                        [&](const Scale& s) -> LinearFactor { return Scale{s.i, field.inv(s.c)}; },
                        [&](const RowAdd& r) -> LinearFactor { return RowAdd{r.i, r.j, field.neg(r.c)}; },
                    },
                    factor);
}

std::string to_string(const LinearFactor& factor, const gf::Field& field) {
  auto coeff = [&field](Elem c) {
    std::string s = field.format(c);
    return field.m() > 1 && s.find('+') != std::string::npos ? '(' + s + ')' : s;
  };
  return std::visit(Overloaded{
                        [](const Swap& s) { return "T(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")"; },
                        [&](const Scale& s) { return "D(" + std::to_string(s.i) + "," + coeff(s.c) + ")"; },
                        [&](const RowAdd& r) {
                          return "R(" + std::to_string(r.i) + "," + std::to_string(r.j) + "," + coeff(r.c) + ")";
                        },
                    },
                    factor);
}

AffineAut AffineAut::make(FieldPtr field, Matrix matrix, std::vector<Elem> translation) {
  if (translation.size() != matrix.size()) {
    throw Error(ErrorKind::ArityMismatch, "translation length does not match matrix size");
  }
  for (Elem e : matrix.row_major()) {
    if (!field->contains(e)) throw Error(ErrorKind::FieldMismatch, "matrix entry outside the field");
  }
  for (Elem e : translation) {
    if (!field->contains(e)) throw Error(ErrorKind::FieldMismatch, "translation entry outside the field");
  }
  const Elem det = linalg::determinant(*field, matrix);
  if (det == field->zero()) throw Error(ErrorKind::SingularMatrix, "affine part has zero determinant");
  return AffineAut(std::move(field), std::move(matrix), std::move(translation), det);
}

TriangularAut TriangularAut::make(FieldPtr field, std::vector<Elem> diag, std::vector<Polynomial> tails) {
  const std::size_t n = diag.size();
  if (tails.size() != n) throw Error(ErrorKind::ArityMismatch, "diag and tails differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!field->contains(diag[i])) throw Error(ErrorKind::FieldMismatch, "diagonal entry outside the field");
    if (diag[i] == field->zero()) {
      throw Error(ErrorKind::ZeroDiagonal, "a_" + std::to_string(i + 1) + " is zero");
    }
    require_same_field(*tails[i].field(), *field, "tail over another field");
    if (tails[i].arity() != n) throw Error(ErrorKind::ArityMismatch, "tail arity differs from n");
    for (std::size_t k = 1; k <= i + 1; ++k) {
      if (tails[i].uses_variable(k)) {
        throw Error(ErrorKind::TailUsesEarlyVariable,
                    "f_" + std::to_string(i + 1) + " uses X" + std::to_string(k));
      }
    }
  }
  return TriangularAut(std::move(field), std::move(diag), std::move(tails));
}

bool TriangularAut::is_strict() const noexcept {
  for (Elem a : diag_) {
    if (a != field_->one()) return false;
  }
  return true;
}

TameWord::TameWord(FieldPtr field, std::size_t n, std::vector<TameFactor> factors)
    : field_(std::move(field)), n_(n), factors_(std::move(factors)) {
  for (const auto& factor : factors_) {
    std::visit(Overloaded{
                   [&](const LinearFactor& l) { validate(l, *field_, n_); },
                   [&](const auto& a) {
                     require_same_field(*a.field(), *field_, "tame factor over another field");
                     if (a.arity() != n_) throw Error(ErrorKind::ArityMismatch, "tame factor arity differs");
                   },
               },
               factor);
  }
}

std::string_view kind_name(const TameFactor& factor) {
  return std::visit(Overloaded{
                        [](const AffineAut&) -> std::string_view { return "affine"; },
                        [](const TriangularAut&) -> std::string_view { return "triangular"; },
                        [](const ElementaryAut&) -> std::string_view { return "elementary"; },
                        [](const LinearFactor& l) -> std::string_view {
                          return std::visit(Overloaded{
                                                [](const Swap&) -> std::string_view { return "swap"; },
                                                [](const Scale&) -> std::string_view { return "scale"; },
                                                [](const RowAdd&) -> std::string_view { return "rowadd"; },
                                            },
                                            l);
                        },
                    },
                    factor);
}

PolyMap to_polymap(const ElementaryAut& e) {
  PolyMap id = PolyMap::identity(e.field(), e.arity());
  std::vector<Polynomial> comps = id.components();
  comps[e.index() - 1] = comps[e.index() - 1] + e.addend();
  return PolyMap(e.field(), std::move(comps));
}

PolyMap to_polymap(const AffineAut& a) {
  const auto& field = a.field();
  const std::size_t n = a.arity();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial f = Polynomial::constant(field, n, a.translation()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> e(n, 0);
      e[j] = 1;
      f.add_term(poly::Monomial{std::move(e)}, a.matrix()(i, j));
    }
    comps.push_back(std::move(f));
  }
  return PolyMap(field, std::move(comps));
}

PolyMap to_polymap(const TriangularAut& j) {
  const std::size_t n = j.arity();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    comps.push_back(Polynomial::variable(j.field(), n, i).scaled(j.diag()[i - 1]) + j.tails()[i - 1]);
  }
  return PolyMap(j.field(), std::move(comps));
}

PolyMap to_polymap(const LinearFactor& factor, const FieldPtr& field, std::size_t n) {
  const Matrix m = to_matrix(factor, *field, n);
  return to_polymap(AffineAut::make(field, m, std::vector<Elem>(n, field->zero())));
}

PolyMap to_polymap(const TameFactor& factor, const FieldPtr& field, std::size_t n) {
  return std::visit(Overloaded{
                        [&](const LinearFactor& l) { return to_polymap(l, field, n); },
                        [](const auto& a) { return to_polymap(a); },
                    },
                    factor);
}

PolyMap to_polymap(const TameWord& w) {
  PolyMap out = PolyMap::identity(w.field(), w.arity());
  for (const auto& factor : w.factors()) out = compose(out, to_polymap(factor, w.field(), w.arity()));
  return out;
}

ElementaryAut inverse(const ElementaryAut& e) { return ElementaryAut::make(e.index(), -e.addend()); }

AffineAut inverse(const AffineAut& a) {
  const auto& field = *a.field();
  auto inv = linalg::inverse(field, a.matrix());
  if (!inv) throw Error(ErrorKind::SingularMatrix, "affine part is singular");
  std::vector<Elem> b = linalg::apply(field, *inv, a.translation());
  for (auto& x : b) x = field.neg(x);
  return AffineAut::make(a.field(), std::move(*inv), std::move(b));
}

TriangularAut inverse(const TriangularAut& j) {
  // y_i = a_i x_i + f_i(x_{i+1}, ..., x_n)  =>  x_i = a_i^{-1} (y_i - f_i(x_{i+1}, ..., x_n)),
  // where x_{i+1}, ..., x_n are already known as polynomials in y.
  const auto& field = j.field();
  const std::size_t n = j.arity();
  std::vector<Polynomial> solved;
  solved.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) solved.push_back(Polynomial::variable(field, n, i));
  std::vector<Elem> diag(n);
  std::vector<Polynomial> tails(n, Polynomial::zero(field, n));
  for (std::size_t i = n; i-- > 0;) {
    const Elem a_inv = field->inv(j.diag()[i]);
    diag[i] = a_inv;
    tails[i] = (-j.tails()[i].substitute(solved)).scaled(a_inv);
    solved[i] = Polynomial::variable(field, n, i + 1).scaled(a_inv) + tails[i];
  }
  return TriangularAut::make(field, std::move(diag), std::move(tails));
}

}  // namespace tamesign::aut
