#include "tamesign/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tamesign/error.hpp"

namespace tamesign::gf {

namespace {

using tamesign::Error;
using tamesign::ErrorKind;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(PrimePoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a by b over F_p; b must have a nonzero leading coefficient.
PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  std::uint64_t lead_inv = 1;
  // Fermat inverse of the leading coefficient.
  for (std::uint64_t base = b.back(), e = p - 2; e > 0; e >>= 1) {
    if (e & 1) lead_inv = lead_inv * base % p;
    base = base * base % p;
  }
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool has_root(const PrimePoly& poly, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const PrimePoly& poly, std::uint32_t p) {
  PrimePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  if (has_root(f, p)) return false;
  for (std::size_t d = 2; d <= degree / 2; ++d) {
    // Enumerate every monic divisor candidate of degree d.
    PrimePoly divisor(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_rem(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::optional<PrimePoly> builtin_modulus(std::uint64_t q) {
  static const std::map<std::uint64_t, PrimePoly> table = {
      {4, {1, 1, 1}},                // t^2+t+1
      {8, {1, 1, 0, 1}},             // t^3+t+1
      {9, {1, 0, 1}},                // t^2+1
      {16, {1, 1, 0, 0, 1}},         // t^4+t+1
      {25, {2, 1, 1}},               // t^2+t+2
      {27, {1, 2, 0, 1}},            // t^3+2t+1
      {32, {1, 0, 1, 0, 0, 1}},      // t^5+t^2+1
      {49, {3, 1, 1}},               // t^2+t+3
      {64, {1, 1, 0, 0, 0, 0, 1}},   // t^6+t+1
  };
  auto it = table.find(q);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::optional<PrimePoly> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::UnsupportedField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) {
      throw Error(ErrorKind::UnsupportedField, "field order exceeds " + std::to_string(Field::kMaxOrder));
    }
  }
  if (m == 1) return std::make_shared<const Field>(p, 1, PrimePoly{});
  if (!modulus) {
    modulus = builtin_modulus(q);
    if (!modulus) {
      throw Error(ErrorKind::UnsupportedField, "no built-in modulus for q = " + std::to_string(q));
    }
  }
  PrimePoly f = *modulus;
  trim(f);
  for (auto& c : f) {
    if (c >= p) {
      throw Error(ErrorKind::ReducibleModulus, "modulus coefficient " + std::to_string(c) + " not reduced mod p");
    }
  }
  if (f.size() != m + 1 || f.back() != 1) {
    throw Error(ErrorKind::ReducibleModulus,
                "modulus " + format_prime_poly(f) + " is not monic of degree " + std::to_string(m));
  }
  if (!is_irreducible(f, p)) {
    throw Error(ErrorKind::ReducibleModulus, format_prime_poly(f) + " is reducible over F_" + std::to_string(p));
  }
  return std::make_shared<const Field>(p, m, std::move(f));
}

FieldPtr make_field_of_order(std::uint64_t q, std::optional<PrimePoly> modulus) {
  if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be a prime power, got " + std::to_string(q));
  const auto primes = distinct_prime_factors(q);
  if (primes.size() != 1) {
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  }
  const std::uint64_t p = primes.front();
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++m;
  if (q > Field::kMaxOrder) {
    throw Error(ErrorKind::UnsupportedField, "field order exceeds " + std::to_string(Field::kMaxOrder));
  }
  return make_field(static_cast<std::uint32_t>(p), m, std::move(modulus));
}

Field::Field(std::uint32_t p, std::uint32_t m, PrimePoly modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  order_primes_ = distinct_prime_factors(q_ - 1);

  neg_.resize(q_);
  for (std::uint32_t r = 0; r < q_; ++r) {
    auto c = coeffs(Elem{r});
    for (auto& d : c) d = (p_ - d) % p_;
    neg_[r] = from_coeffs(c).rank;
  }

  if (p_ != 2 && m_ > 1 && q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const auto ca = coeffs(Elem{a});
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto cb = coeffs(Elem{b});
        for (std::uint32_t i = 0; i < m_; ++i) cb[i] = (ca[i] + cb[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(from_coeffs(cb).rank);
      }
    }
  }

  generator_ = Elem{1};
  for (std::uint32_t r = 1; r < q_; ++r) {
    if (order_by_reduction(Elem{r}) == q_ - 1) {
      generator_ = Elem{r};
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem power = one();
  for (std::uint32_t h = 0; h + 1 < q_; ++h) {
    exp_[h] = power.rank;
    log_[power.rank] = h;
    power = mul_by_reduction(power, generator_);
  }
}

bool Field::operator==(const Field& other) const noexcept {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

Elem Field::from_int(std::int64_t value) const noexcept {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Elem Field::element(std::uint64_t rank) const {
  if (rank >= q_) {
    throw Error(ErrorKind::RankOutOfRange,
                "rank " + std::to_string(rank) + " outside [0, " + std::to_string(q_) + ")");
  }
  return Elem{static_cast<std::uint32_t>(rank)};
}

std::uint32_t Field::rank(Elem e) const {
  check(e);
  return e.rank;
}

Elem Field::t() const {
  if (m_ == 1) throw Error(ErrorKind::FieldMismatch, "prime field F_" + std::to_string(p_) + " has no generator t");
  return Elem{p_};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) {
    throw Error(ErrorKind::FieldMismatch,
                "coefficient vector of length " + std::to_string(coeffs.size()) + ", expected " + std::to_string(m_));
  }
  std::uint32_t r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorKind::FieldMismatch, "coefficient not reduced mod p");
    r = r * p_ + coeffs[i];
  }
  return Elem{r};
}

std::vector<std::uint32_t> Field::coeffs(Elem e) const {
  check(e);
  std::vector<std::uint32_t> out(m_);
  std::uint32_t r = e.rank;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = r % p_;
    r /= p_;
  }
  return out;
}

void Field::check(Elem e) const {
  if (e.rank >= q_) {
    throw Error(ErrorKind::FieldMismatch,
                "element rank " + std::to_string(e.rank) + " does not belong to F_" + std::to_string(q_));
  }
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (p_ == 2) return Elem{a.rank ^ b.rank};
  if (m_ == 1) return Elem{(a.rank + b.rank) % p_};
  if (!add_table_.empty()) return Elem{add_table_[static_cast<std::size_t>(a.rank) * q_ + b.rank]};
  std::uint32_t out = 0, weight = 1, x = a.rank, y = b.rank;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * weight;
    x /= p_;
    y /= p_;
    weight *= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const {
  check(a);
  return Elem{neg_[a.rank]};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a.rank == 0 || b.rank == 0) return zero();
  return Elem{exp_[(static_cast<std::uint64_t>(log_[a.rank]) + log_[b.rank]) % (q_ - 1)]};
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a.rank == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Elem{exp_[(q_ - 1 - log_[a.rank]) % (q_ - 1)]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.rank == 0) return zero();
  const std::uint64_t order = q_ - 1;
  return Elem{exp_[(log_[a.rank] % order) * (e % order) % order]};
}

Elem Field::mul_by_reduction(Elem a, Elem b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(ca[0]) * cb[0] % p_)};
  PrimePoly product(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  PrimePoly r = poly_rem(std::move(product), modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

Elem Field::pow_by_reduction(Elem a, std::uint64_t e) const {
  Elem result = one();
  for (Elem base = a; e > 0; e >>= 1) {
    if (e & 1) result = mul_by_reduction(result, base);
    base = mul_by_reduction(base, base);
  }
  return result;
}

std::uint64_t Field::order_by_reduction(Elem c) const {
  std::uint64_t x = q_ - 1;
  for (std::uint64_t r : order_primes_) {
    while (x % r == 0 && pow_by_reduction(c, x / r) == one()) x /= r;
  }
  return x;
}

std::uint64_t Field::mult_order(Elem c) const {
  check(c);
  if (c.rank == 0) throw Error(ErrorKind::ZeroElement, "order of zero");
  std::uint64_t x = q_ - 1;
  for (std::uint64_t r : order_primes_) {
    while (x % r == 0 && pow(c, x / r) == one()) x /= r;
  }
  return x;
}

std::uint64_t Field::discrete_log(Elem c, Elem g) const {
  check(c);
  check(g);
  if (c.rank == 0) throw Error(ErrorKind::ZeroElement, "discrete log of zero");
  if (g.rank == 0 || mult_order(g) != q_ - 1) {
    throw Error(ErrorKind::NotAGenerator, format(g) + " does not generate F_" + std::to_string(q_) + "^*");
  }
  Elem power = one();
  for (std::uint64_t h = 0; h + 1 < q_; ++h) {
    if (power == c) return h;
    power = mul(power, g);
  }
  // Unreachable for a generator.
  throw Error(ErrorKind::NotAGenerator, "power scan exhausted");
}

std::uint32_t Field::log(Elem c) const {
  check(c);
  if (c.rank == 0) throw Error(ErrorKind::ZeroElement, "discrete log of zero");
  return log_[c.rank];
}

bool Field::is_square(Elem c) const {
  check(c);
  if (c.rank == 0) throw Error(ErrorKind::ZeroElement, "squareness of zero");
  if (p_ == 2) return true;
  return pow(c, (q_ - 1) / 2) == one();
}

std::string format_prime_poly(const PrimePoly& poly, char var) {
  std::string out;
  for (std::size_t i = poly.size(); i-- > 0;) {
    const std::uint32_t c = poly[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + '*';
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string Field::format(Elem e) const {
  if (m_ == 1) return std::to_string(rank(e));
  return format_prime_poly(coeffs(e));
}

std::string Field::format_modulus() const { return m_ == 1 ? std::string{} : format_prime_poly(modulus_); }

}  // namespace tamesign::gf
