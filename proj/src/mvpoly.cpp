#include "tamesign/mvpoly.hpp"

#include <algorithm>

#include "tamesign/error.hpp"

namespace tamesign::poly {

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

Polynomial::Polynomial(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

Polynomial Polynomial::constant(FieldPtr field, std::size_t n, Elem c) {
  Polynomial out(std::move(field), n);
  out.add_term(Monomial{std::vector<std::uint32_t>(n, 0)}, c);
  return out;
}

Polynomial Polynomial::variable(FieldPtr field, std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::ArityMismatch, "variable X" + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  std::vector<std::uint32_t> e(n, 0);
  e[i - 1] = 1;
  Polynomial out(field, n);
  out.add_term(Monomial{std::move(e)}, field->one());
  return out;
}

Polynomial Polynomial::monomial(FieldPtr field, std::size_t n, Elem c, std::vector<std::uint32_t> exponents) {
  if (exponents.size() != n) {
    throw Error(ErrorKind::ArityMismatch,
                "exponent vector of length " + std::to_string(exponents.size()) + " for arity " + std::to_string(n));
  }
  Polynomial out(std::move(field), n);
  out.add_term(Monomial{std::move(exponents)}, c);
  return out;
}

std::uint64_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Elem Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{std::vector<std::uint32_t>(n_, 0)});
  return it == terms_.end() ? field_->zero() : it->second;
}

bool Polynomial::uses_variable(std::size_t i) const {
  if (i < 1 || i > n_) {
    throw Error(ErrorKind::ArityMismatch, "variable X" + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.exponents[i - 1] > 0; });
}

Elem Polynomial::linear_coefficient(std::size_t i) const {
  std::vector<std::uint32_t> e(n_, 0);
  e.at(i - 1) = 1;
  auto it = terms_.find(Monomial{std::move(e)});
  return it == terms_.end() ? field_->zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c) {
  if (m.exponents.size() != n_) {
    throw Error(ErrorKind::ArityMismatch, "monomial arity does not match polynomial arity");
  }
  if (c == field_->zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == field_->zero()) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (!(*field_ == *other.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (n_ != other.n_) {
    throw Error(ErrorKind::ArityMismatch,
                "arity " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_compatible(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
  Polynomial out(field_, n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_->neg(c));
  return out;
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial out(field_, n_);
  if (c == field_->zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, field_->mul(coeff, c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_compatible(other);
  Polynomial out(field_, n_);
  Monomial product{std::vector<std::uint32_t>(n_)};
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (std::size_t k = 0; k < n_; ++k) product.exponents[k] = ma.exponents[k] + mb.exponents[k];
      out.add_term(product, field_->mul(ca, cb));
    }
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(field_, n_, field_->one());
  Polynomial base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return *field_ == *other.field_ && n_ == other.n_ && terms_ == other.terms_;
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
  if (point.size() != n_) {
    throw Error(ErrorKind::ArityMismatch,
                "point of length " + std::to_string(point.size()) + " for arity " + std::to_string(n_));
  }
  const auto& f = *field_;
  Elem acc = f.zero();
  for (const auto& [m, c] : terms_) {
    Elem value = c;
    for (std::size_t k = 0; k < n_ && value != f.zero(); ++k) {
      if (m.exponents[k] > 0) value = f.mul(value, f.pow(point[k], m.exponents[k]));
    }
    acc = f.add(acc, value);
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != n_) {
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(images.size()) + " images for arity " + std::to_string(n_));
  }
  const std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images) {
    if (!(*img.field() == *field_)) throw Error(ErrorKind::FieldMismatch, "substitution image over another field");
    if (img.arity() != target) throw Error(ErrorKind::ArityMismatch, "substitution images differ in arity");
  }
  // Powers of each image are shared across terms.
  std::vector<std::vector<Polynomial>> powers(n_);
  auto power_of = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(field_, target, field_->one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  Polynomial out(field_, target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(field_, target, c);
    for (std::size_t k = 0; k < n_; ++k) {
      if (m.exponents[k] > 0) term = term * power_of(k, m.exponents[k]);
    }
    for (const auto& [tm, tc] : term.terms_) out.add_term(tm, tc);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = *field_;
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string vars;
    for (std::size_t k = 0; k < n_; ++k) {
      if (m.exponents[k] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += 'X' + std::to_string(k + 1);
      if (m.exponents[k] > 1) vars += '^' + std::to_string(m.exponents[k]);
    }
    std::string coeff = f.format(c);
    if (f.m() > 1 && coeff.find('+') != std::string::npos) coeff = '(' + coeff + ')';
    if (!out.empty()) out += " + ";
    if (vars.empty()) {
      out += coeff;
    } else if (c == f.one()) {
      out += vars;
    } else {
      out += coeff + '*' + vars;
    }
  }
  return out;
}

std::uint64_t count_full_support_monomials(const Polynomial& f, std::optional<std::size_t> excluded) {
  if (excluded && f.uses_variable(*excluded)) {
    throw Error(ErrorKind::VariableUsed, "polynomial depends on X" + std::to_string(*excluded));
  }
  std::uint64_t count = 0;
  for (const auto& [m, c] : f.terms()) {
    bool full = true;
    for (std::size_t k = 0; k < f.arity() && full; ++k) {
      if (excluded && k + 1 == *excluded) continue;
      full = m.exponents[k] >= 1;
    }
    if (full) ++count;
  }
  return count;
}

Polynomial reduce_exponents(const Polynomial& f) {
  const std::uint32_t period = f.field()->q() - 1;
  Polynomial out(f.field(), f.arity());
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    for (auto& e : r.exponents) {
      if (e >= 1) e = (e - 1) % period + 1;
    }
    out.add_term(r, c);
  }
  return out;
}

}  // namespace tamesign::poly
