// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tamesign/cli.hpp"
#include "tamesign/error.hpp"
#include "tamesign/parse.hpp"
#include "tamesign/perm.hpp"
#include "tamesign/random.hpp"
#include "tamesign/signcalc.hpp"

using namespace tamesign;
using gf::Elem;
using perm::Sign;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.note = what;
  }
}

int oracle(const aut::PolyMap& m) { return perm::value(perm::permutation_sign(perm::induced_permutation(m))); }

aut::AffineAut affine_example(const gf::FieldPtr& f, Elem alpha, Elem beta) {
  linalg::Matrix m(3);
  m(0, 2) = f->one();
  m(1, 1) = f->one();
  m(2, 0) = alpha;
  m(2, 2) = beta;
  return aut::AffineAut::make(f, m, std::vector<Elem>(3));
}

Outcome elementary_example() {
  Outcome o;
  const auto f = gf::make_field_of_order(2);
  const char* addends[] = {"X2*X3", "X2^2*X3", "X2*X3 + X2^2*X3"};
  const int expected[] = {-1, -1, 1};
  for (int k = 0; k < 3; ++k) {
    const auto e = aut::ElementaryAut::make(1, text::parse_polynomial(addends[k], f, 3));
    const int s = perm::value(sign::sign_elementary(e));
    require(o, s == expected[k], std::string("formula sign for ") + addends[k]);
    require(o, oracle(aut::to_polymap(e)) == s, std::string("oracle sign for ") + addends[k]);
  }
  // Same example on the second coordinate: a = X1 X3, b = X1^2 X3.
  const auto a2 = aut::ElementaryAut::make(2, text::parse_polynomial("X1*X3", f, 3));
  const auto b2 = aut::ElementaryAut::make(2, text::parse_polynomial("X1^2*X3", f, 3));
  const auto ab2 = aut::ElementaryAut::make(2, text::parse_polynomial("X1*X3 + X1^2*X3", f, 3));
  require(o, sign::sign_elementary(a2) == Sign::minus && oracle(aut::to_polymap(a2)) == -1, "a on X2");
  require(o, sign::sign_elementary(b2) == Sign::minus && oracle(aut::to_polymap(b2)) == -1, "b on X2");
  require(o, sign::sign_elementary(ab2) == Sign::plus && oracle(aut::to_polymap(ab2)) == 1, "a+b on X2");
  return o;
}

Outcome affine_example_check() {
  Outcome o;
  for (std::uint64_t q : {2u, 4u, 8u}) {
    const auto f = gf::make_field_of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto A = affine_example(f, Elem{a}, Elem{b});
        const int s = perm::value(sign::sign_affine(A));
        require(o, s == 1, "even q formula");
        require(o, oracle(aut::to_polymap(A)) == s, "even q oracle");
      }
    }
  }
  for (std::uint64_t q : {3u, 5u}) {
    const auto f = gf::make_field_of_order(q);
    const int expect = q == 5 ? -1 : 1;
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto A = affine_example(f, Elem{2}, Elem{b});
      require(o, perm::value(sign::sign_affine(A)) == expect, "odd q formula, q=" + std::to_string(q));
      require(o, oracle(aut::to_polymap(A)) == expect, "odd q oracle, q=" + std::to_string(q));
    }
  }
  return o;
}

Outcome scale_check() {
  Outcome o;
  const auto f = gf::make_field_of_order(5);
  const aut::LinearFactor d = aut::Scale{1, Elem{2}};
  const int s = oracle(aut::to_polymap(d, f, 1));
  require(o, s == -1, "oracle sign of 2*X1 on F_5");
  require(o, perm::value(sign::sign_scale(*f, Elem{2})) == s, "squareness formula");
  const int order_reading = f->mult_order(Elem{2}) % 2 == 0 ? 1 : -1;
  require(o, order_reading == 1 && order_reading != s, "order reading differs");
  return o;
}

cli::Report suite_report;

Outcome differential_suite() {
  Outcome o;
  cli::Request r;
  r.command = "verify";
  r.qs = {2, 3, 4, 5, 7, 8, 9};
  r.ns = {2, 3};
  r.samples = 200;
  r.length = 5;
  r.seed = 1;
  suite_report = cli::run(r);
  const auto& b = suite_report.body;
  require(o, suite_report.exit_code == cli::ExitCode::ok, "exit code");
  require(o, b.contains("cases") && b["cases"] == 7 * 2 * 5 * 200, "case count");
  require(o, b.contains("disagreements") && b["disagreements"] == 0,
          "disagreements: " + (b.contains("disagreements") ? b["disagreements"].dump() : b.dump()));
  return o;
}

Outcome alternating_corollaries() {
  Outcome o;
  const auto& b = suite_report.body;
  require(o, b.contains("tally") && !b["tally"].empty(), "suite 4 tally missing");
  if (!o.ok) return o;
  std::size_t checked = 0;
  for (const auto& row : b["tally"]) {
    const auto q = row["q"].get<std::uint64_t>();
    const auto n = row["n"].get<std::size_t>();
    const auto fam = row["family"].get<std::string>();
    const auto minus = row["minus"].get<std::uint64_t>();
    const bool even_ext = q == 4 || q == 8;
    bool must_be_even = false;
    if (fam == "elementary" && q != 2) must_be_even = true;
    if (fam == "affine" && (even_ext || (q == 2 && n >= 3))) must_be_even = true;
    if (fam == "tame" && even_ext) must_be_even = true;
    if (must_be_even) {
      ++checked;
      require(o, minus == 0, fam + " q=" + std::to_string(q) + " n=" + std::to_string(n) + " has odd signs");
    }
  }
  require(o, checked == 12 + 5 + 4, "unexpected tally shape");
  return o;
}

Outcome maubach() {
  Outcome o;
  for (std::uint64_t q : {4u, 3u, 2u}) {
    cli::Request r;
    r.command = "maubach";
    r.q = q;
    r.n = 2;
    r.samples = 300;
    const auto rep = cli::run(r);
    const auto& b = rep.body;
    require(o, rep.exit_code == cli::ExitCode::ok, "maubach exit, q=" + std::to_string(q));
    if (!b.contains("plus")) continue;
    require(o, b["disagreements"] == 0, "formula/oracle, q=" + std::to_string(q));
    if (q == 4) {
      require(o, b["minus"] == 0, "q=4 all even");
    } else {
      require(o, b["plus"].get<int>() > 0 && b["minus"].get<int>() > 0, "both signs, q=" + std::to_string(q));
    }
  }
  cli::Request c;
  c.command = "maubach";
  c.q = 2;
  c.n = 2;
  c.mode = "closure";
  const auto rep = cli::run(c);
  require(o, rep.body.contains("order") && rep.body["order"] == 24, "closure order");
  return o;
}

Outcome decomposition_independence() {
  Outcome o;
  gen::Rng rng(7007);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 100; ++k) {
      const auto m = gen::random_invertible_matrix(*f, 3, rng);
      const auto A = aut::AffineAut::make(f, m, std::vector<Elem>(3));
      const int expect = oracle(aut::to_polymap(A));
      auto factors = sign::decompose_linear(*f, m).factors;
      require(o, perm::value(sign::sign_of_factors(*f, 3, factors)) == expect, "plain factor list");
      require(o, perm::value(sign::sign_affine(A)) == expect, "sign_affine");
      for (int ins = 0; ins < 4; ++ins) {
        const auto pos = static_cast<std::ptrdiff_t>(rng.below(factors.size() + 1));
        const std::size_t i = 1 + rng.below(3);
        if (rng.coin()) {
          std::size_t j = 1 + rng.below(2);
          if (j >= i) ++j;
          const aut::LinearFactor t = aut::Swap{i, j};
          factors.insert(factors.begin() + pos, {t, t});
        } else {
          const Elem c = gen::random_nonzero(*f, rng);
          factors.insert(factors.begin() + pos,
                         {aut::LinearFactor{aut::Scale{i, c}}, aut::LinearFactor{aut::Scale{i, f->inv(c)}}});
        }
        require(o, sign::factor_product(*f, 3, factors) == m, "padded product");
        require(o, perm::value(sign::sign_of_factors(*f, 3, factors)) == expect, "padded factor list");
      }
    }
  }
  return o;
}

Outcome determinant_law() {
  Outcome o;
  gen::Rng rng(8008);
  for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
    const auto f = gf::make_field_of_order(q);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + rng.below(3);
      const auto A = gen::random_affine(f, n, rng);
      const Sign s = sign::sign_affine(A);
      require(o, (s == Sign::plus) == f->is_square(A.determinant()), "det law, q=" + std::to_string(q));
      require(o, perm::value(s) == oracle(aut::to_polymap(A)), "oracle, q=" + std::to_string(q));
    }
  }
  return o;
}

int inversion_sign(const std::vector<std::uint32_t>& a) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) inv += a[i] > a[j];
  return inv % 2 ? -1 : 1;
}

Outcome oracle_consistency() {
  Outcome o;
  gen::Rng rng(9009);
  for (int k = 0; k < 100; ++k) {
    const auto p = gen::random_permutation(1 + rng.below(256), rng);
    require(o, perm::value(perm::permutation_sign(p)) == inversion_sign(p.images()), "cycle vs inversion parity");
  }
  const std::uint64_t qs[] = {2, 3, 4, 5};
  for (int k = 0; k < 100; ++k) {
    const auto f = gf::make_field_of_order(qs[k % 4]);
    const std::size_t n = 1 + k % 3;
    const auto F = aut::to_polymap(gen::random_tame_factor(f, n, rng), f, n);
    const auto G = aut::to_polymap(gen::random_tame_factor(f, n, rng), f, n);
    const auto lhs = perm::induced_permutation(aut::compose(F, G));
    const auto rhs = perm::compose_permutations(perm::induced_permutation(F), perm::induced_permutation(G));
    require(o, lhs == rhs, "homomorphism");
  }
  return o;
}

double seconds_of(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome performance() {
  Outcome o;
  const auto f9 = gf::make_field_of_order(9);
  const auto map = text::parse_polymap("(X1 + X2^3*X3^3, 2*X2 + t*X3^5 + X3, X3 + 1)", f9, 3);
  require(o, map.degree() == 6, "degree 6 map");
  Sign s = Sign::plus;
  const double small = seconds_of([&] { s = perm::permutation_sign(perm::induced_permutation(map)); });
  require(o, small < 0.1, "q=9 n=3 took " + std::to_string(small) + " s");
  const auto tri = aut::TriangularAut::make(
      f9, {f9->one(), Elem{2}, f9->one()},
      {text::parse_polynomial("X2^3*X3^3", f9, 3), text::parse_polynomial("t*X3^5 + X3", f9, 3),
       text::parse_polynomial("1", f9, 3)});
  require(o, s == sign::sign_triangular(tri), "q=9 sign matches formula");

  const auto f16 = gf::make_field_of_order(16);
  gen::Rng rng(1010);
  const auto m = gen::random_invertible_matrix(*f16, 5, rng);
  const auto A = aut::AffineAut::make(f16, m, std::vector<Elem>(5));
  Sign big = Sign::plus;
  const double large = seconds_of(
      [&] { big = perm::permutation_sign(perm::induced_permutation(aut::to_polymap(A), std::uint64_t{1} << 20)); });
  require(o, large < 10.0, "q=16 n=5 took " + std::to_string(large) + " s");
  require(o, big == Sign::plus, "q=16 sign is +1");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_s;
  };
  const Criterion criteria[] = {
      {1, "elementary example over F_2^3", elementary_example, 1.0},
      {2, "affine example (X3, X2, aX1 + bX3)", affine_example_check, 1.0},
      {3, "scale sign follows squareness", scale_check, 0.0},
      {4, "differential suite", differential_suite, 120.0},
      {5, "alternating-group corollaries", alternating_corollaries, 0.0},
      {6, "maubach signs and closure", maubach, 60.0},
      {7, "decomposition independence", decomposition_independence, 0.0},
      {8, "determinant law for odd q", determinant_law, 0.0},
      {9, "oracle self-consistency", oracle_consistency, 0.0},
      {10, "performance floor", performance, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    double secs = 0;
    try {
      secs = seconds_of([&] { out = c.run(); });
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    if (out.ok && c.limit_s > 0 && secs >= c.limit_s) {
      out.ok = false;
      out.note = "over time limit";
    }
    failures += !out.ok;
    std::printf("criterion %2d: %s  %-40s %9.3f s%s%s\n", c.id, out.ok ? "PASS" : "FAIL", c.name, secs,
                out.note.empty() ? "" : "  ", out.note.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
