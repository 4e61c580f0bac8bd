#include "tamesign/perm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tamesign/error.hpp"

namespace tamesign::perm {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::string format_point(const Field& field, std::span<const Elem> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ',';
    out += field.format(point[i]);
  }
  return out + ")";
}

// Fails with a witness pair when two inputs share an image.
void require_bijective(const aut::PolyMap& map, const std::vector<std::uint32_t>& images) {
  const auto& field = *map.field();
  std::vector<std::uint32_t> preimage(images.size(), kUnset);
  for (std::uint32_t r = 0; r < images.size(); ++r) {
    auto& slot = preimage[images[r]];
    if (slot != kUnset) {
      const auto a = point_unrank(field, map.arity(), slot);
      const auto b = point_unrank(field, map.arity(), r);
      const auto y = point_unrank(field, map.arity(), images[r]);
      throw Error(ErrorKind::NotBijective, "points " + format_point(field, a) + " and " + format_point(field, b) +
                                               " both map to " + format_point(field, y));
    }
    slot = r;
  }
}

// Polynomial components flattened for the hot loop: each term is a
// coefficient logarithm plus (variable, exponent mod q-1) pairs, so a term
// value is one table lookup once all its variables are nonzero.
class CompiledMap {
 public:
  explicit CompiledMap(const aut::PolyMap& map) : field_(*map.field()), n_(map.arity()), q_(field_.q()) {
    const std::uint32_t order = q_ - 1;
    log_.assign(q_, 0);
    for (std::uint32_t r = 1; r < q_; ++r) log_[r] = field_.log(Elem{r});
    exp_.resize(order);
    for (std::uint32_t h = 0; h < order; ++h) exp_[h] = field_.exp(h).rank;
    for (const auto& f : map.components()) {
      Component c;
      c.constant = f.constant_term().rank;
      for (const auto& [mono, coeff] : f.terms()) {
        if (mono.degree() == 0) continue;
        Term t{log_[coeff.rank], static_cast<std::uint32_t>(factors_.size()), 0};
        for (std::size_t k = 0; k < n_; ++k) {
          if (mono.exponents[k] == 0) continue;
          factors_.push_back({static_cast<std::uint32_t>(k), mono.exponents[k] % order});
          ++t.factor_count;
        }
        c.terms.push_back(t);
      }
      components_.push_back(std::move(c));
    }
  }

  // Ranks of F(point) written into out[0..n).
  void apply(const std::uint32_t* point, std::uint32_t* out) const {
    const std::uint64_t order = q_ - 1;
    for (std::size_t i = 0; i < n_; ++i) {
      const Component& c = components_[i];
      std::uint32_t acc = c.constant;
      for (const Term& t : c.terms) {
        std::uint64_t log_sum = t.coeff_log;
        bool zero = false;
        for (std::uint32_t k = 0; k < t.factor_count; ++k) {
          const Factor& f = factors_[t.first_factor + k];
          const std::uint32_t x = point[f.var];
          if (x == 0) {
            zero = true;
            break;
          }
          log_sum += static_cast<std::uint64_t>(log_[x]) * f.exponent;
        }
        if (zero) continue;
        const std::uint32_t value = exp_[log_sum % order];
        acc = field_.p() == 2 ? (acc ^ value) : field_.add(Elem{acc}, Elem{value}).rank;
      }
      out[i] = acc;
    }
  }

 private:
  struct Term {
    std::uint32_t coeff_log;
    std::uint32_t first_factor;
    std::uint32_t factor_count;
  };
  struct Factor {
    std::uint32_t var;
    std::uint32_t exponent;
  };
  struct Component {
    std::uint32_t constant = 0;
    std::vector<Term> terms;
  };

  const Field& field_;
  std::size_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<Factor> factors_;
  std::vector<Component> components_;
};

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t r = 0; r < images_.size(); ++r) {
    const std::uint32_t y = images_[r];
    if (y >= images_.size() || seen[y]) {
      throw Error(ErrorKind::NotBijective, "image table is not a bijection (rank " + std::to_string(r) + ")");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(Trusted{}, std::move(images));
}

std::uint64_t point_count(const Field& field, std::size_t n, std::uint64_t budget) {
  const std::uint64_t limit = std::min<std::uint64_t>(budget, std::numeric_limits<std::uint32_t>::max());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= field.q();
    if (count > limit) {
      throw Error(ErrorKind::BudgetExceeded, "q^n = " + std::to_string(field.q()) + "^" + std::to_string(n) +
                                                 " exceeds the enumeration budget of " + std::to_string(budget));
    }
  }
  return count;
}

std::uint64_t point_rank(const Field& field, std::span<const Elem> point) {
  std::uint64_t r = 0;
  for (std::size_t i = point.size(); i-- > 0;) r = r * field.q() + field.rank(point[i]);
  return r;
}

std::vector<Elem> point_unrank(const Field& field, std::size_t n, std::uint64_t rank) {
  std::vector<Elem> out(n);
  std::uint64_t r = rank;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Elem{static_cast<std::uint32_t>(r % field.q())};
    r /= field.q();
  }
  if (r != 0) {
    throw Error(ErrorKind::RankOutOfRange, "point rank " + std::to_string(rank) + " outside [0, q^n)");
  }
  return out;
}

Permutation induced_permutation(const aut::PolyMap& map, std::uint64_t budget) {
  const auto& field = *map.field();
  const std::size_t n = map.arity();
  const std::uint64_t total = point_count(field, n, budget);
  const std::uint32_t q = field.q();
  const CompiledMap compiled(map);
  std::vector<std::uint32_t> images(total);

  // Contiguous blocks; each block walks its points with an odometer.
  constexpr std::int64_t kBlock = 4096;
  const std::int64_t blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel
  {
    std::vector<std::uint32_t> point(n), out(n);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t end = std::min<std::uint64_t>(begin + kBlock, total);
      std::uint64_t r = begin;
      for (std::size_t i = 0; i < n; ++i) {
        point[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        compiled.apply(point.data(), out.data());
        std::uint64_t image = 0;
        for (std::size_t i = n; i-- > 0;) image = image * q + out[i];
        images[idx] = static_cast<std::uint32_t>(image);
        for (std::size_t i = 0; i < n; ++i) {
          if (++point[i] < q) break;
          point[i] = 0;
        }
      }
    }
  }
  require_bijective(map, images);
  return Permutation(std::move(images));
}

Permutation induced_permutation(const aut::TameWord& word, std::uint64_t budget) {
  const std::uint64_t total = point_count(*word.field(), word.arity(), budget);
  Permutation out = Permutation::identity(total);
  for (const auto& factor : word.factors()) {
    out = compose_permutations(out, induced_permutation(aut::to_polymap(factor, word.field(), word.arity()), budget));
  }
  return out;
}

Permutation induced_permutation_serial(const aut::PolyMap& map, std::uint64_t budget) {
  const auto& field = *map.field();
  const std::size_t n = map.arity();
  const std::uint64_t total = point_count(field, n, budget);
  std::vector<std::uint32_t> images(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto point = point_unrank(field, n, r);
    images[r] = static_cast<std::uint32_t>(point_rank(field, map.apply(point)));
  }
  require_bijective(map, images);
  return Permutation(std::move(images));
}

std::size_t cycle_count(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> visited(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t r = start; !visited[r]; r = sigma[r]) visited[r] = true;
  }
  return cycles;
}

Sign permutation_sign(const Permutation& sigma) { return sign_of_parity(sigma.size() - cycle_count(sigma)); }

Sign permutation_sign_by_inversions(const Permutation& sigma) {
  const auto& img = sigma.images();
  const std::int64_t n = static_cast<std::int64_t>(img.size());
  std::uint64_t parity = 0;
#pragma omp parallel for reduction(^ : parity) schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint64_t local = 0;
    for (std::int64_t j = i + 1; j < n; ++j) local += img[i] > img[j];
    parity ^= local & 1u;
  }
  return sign_of_parity(parity);
}

std::vector<std::vector<std::uint32_t>> nontrivial_cycles(const Permutation& sigma) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> visited(sigma.size(), false);
  for (std::uint32_t start = 0; start < sigma.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t r = start; !visited[r]; r = sigma[r]) {
      visited[r] = true;
      cycle.push_back(r);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose_permutations(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "composing permutations of sizes " + std::to_string(tau.size()) + " and " + std::to_string(sigma.size()));
  }
  std::vector<std::uint32_t> images(sigma.size());
  for (std::size_t r = 0; r < sigma.size(); ++r) images[r] = tau[sigma[r]];
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Sign oracle_sign(const aut::PolyMap& map, std::uint64_t budget) {
  return permutation_sign(induced_permutation(map, budget));
}

}  // namespace tamesign::perm
