#include "tamesign/cli.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

#include "tamesign/parse.hpp"
#include "tamesign/random.hpp"
#include "tamesign/signcalc.hpp"

namespace tamesign::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Clock = std::chrono::steady_clock;
using gf::FieldPtr;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json field_json(const gf::Field& f) {
  Json j;
  j["p"] = f.p();
  j["m"] = f.m();
  j["modulus"] = f.m() == 1 ? Json(nullptr) : Json(f.format_modulus());
  return j;
}

Json base(const Request& r, const FieldPtr& field) {
  Json j;
  j["command"] = r.command;
  j["field"] = field ? field_json(*field) : Json(nullptr);
  j["n"] = r.n == 0 ? Json(nullptr) : Json(r.n);
  j["sign"] = nullptr;
  j["method"] = nullptr;
  j["factors"] = Json::array();
  j["timing_ms"] = 0.0;
  j["counterexample"] = nullptr;
  return j;
}

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Usage, what); }

std::uint32_t smallest_prime_factor(std::uint64_t q) {
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return static_cast<std::uint32_t>(d);
  }
  return static_cast<std::uint32_t>(q);
}

FieldPtr field_for(std::uint64_t q, const std::optional<std::string>& modulus) {
  if (q < 2) usage("--q must be a prime power >= 2");
  if (!modulus) return gf::make_field_of_order(q);
  return gf::make_field_of_order(q, text::parse_prime_poly(*modulus, smallest_prime_factor(q)));
}

FieldPtr field_for(const Request& r) {
  if (r.q == 0) usage("--q is required for " + r.command);
  if (r.n == 0) usage("--n is required for " + r.command);
  return field_for(r.q, r.modulus);
}

void require_single_input(const Request& r) {
  if (r.map.has_value() == r.word.has_value()) usage(r.command + " needs exactly one of --map or --word");
}

void check_degree(const aut::PolyMap& map) {
  if (map.degree() > kMaxInputDegree) {
    usage("map degree " + std::to_string(map.degree()) + " exceeds the cap of " + std::to_string(kMaxInputDegree));
  }
}

aut::TameWord single(const FieldPtr& field, std::size_t n, aut::TameFactor f) {
  return aut::TameWord(field, n, {std::move(f)});
}

aut::TameFactor as_factor(const text::Classified& c) {
  return std::visit(Overloaded{
                        [](const aut::ElementaryAut& e) -> aut::TameFactor { return e; },
                        [](const aut::AffineAut& a) -> aut::TameFactor { return a; },
                        [](const aut::TriangularAut& j) -> aut::TameFactor { return j; },
                        [](const text::GenericMap&) -> aut::TameFactor {
                          throw Error(ErrorKind::NotFormulaEligible,
                                      "generic map with no factorization; use the oracle command");
                        },
                    },
                    c);
}

Json factor_list(const sign::WordSign& ws) {
  Json out = Json::array();
  for (const auto& f : ws.factors) out.push_back({{"kind", f.kind}, {"sign", perm::value(f.sign)}});
  return out;
}

// The oracle permutation of either a --map or a --word input.
perm::Permutation oracle_permutation(const Request& r, const FieldPtr& field) {
  require_single_input(r);
  if (r.map) {
    const auto map = text::parse_polymap(*r.map, field, r.n);
    check_degree(map);
    return perm::induced_permutation(map, r.budget);
  }
  return perm::induced_permutation(text::parse_word(*r.word, field, r.n), r.budget);
}

std::vector<gen::Family> families_of(const Request& r) {
  if (r.families.empty()) return gen::all_families();
  std::vector<gen::Family> out;
  for (const auto& name : r.families) {
    if (name == "all") return gen::all_families();
    out.push_back(gen::parse_family(name));
  }
  return out;
}

aut::TameWord sample_instance(gen::Family family, const FieldPtr& field, std::size_t n, std::size_t max_length,
                              gen::Rng& rng) {
  switch (family) {
    case gen::Family::elementary:
      return single(field, n, gen::random_elementary(field, n, rng));
    case gen::Family::linear:
      return single(field, n, gen::random_linear_factor(*field, n, rng));
    case gen::Family::affine:
      return single(field, n, gen::random_affine(field, n, rng));
    case gen::Family::triangular:
      return single(field, n, gen::random_triangular(field, n, rng));
    case gen::Family::tame:
      return gen::random_tame_word(field, n, rng.between(1, max_length), rng);
  }
  return aut::TameWord(field, n);
}

std::string replay_command(std::uint64_t q, std::size_t n, const std::string& word) {
  return "tamesign sign --q " + std::to_string(q) + " --n " + std::to_string(n) + " --word \"" + word + "\"";
}

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

// Image table of at most 16 points packed 4 bits per entry.
std::uint64_t pack(const std::vector<std::uint32_t>& images) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < images.size(); ++k) key |= static_cast<std::uint64_t>(images[k]) << (4 * k);
  return key;
}

// T_{1,j}, D_1(g) when q > 2, and E_1(m) for every monomial m in X_2..X_n
// with exponents below q (the constant monomial gives a translation).
std::vector<aut::TameFactor> standard_generators(const FieldPtr& field, std::size_t n) {
  std::vector<aut::TameFactor> gens;
  for (std::size_t j = 2; j <= n; ++j) gens.push_back(aut::LinearFactor{aut::Swap{1, j}});
  if (field->q() > 2) gens.push_back(aut::LinearFactor{aut::Scale{1, field->generator()}});
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    gens.push_back(aut::ElementaryAut::make(1, poly::Polynomial::monomial(field, n, field->one(), e)));
    std::size_t k = 1;
    for (; k < n; ++k) {
      if (++e[k] < field->q()) break;
      e[k] = 0;
    }
    if (k == n) break;
  }
  return gens;
}

Report closure(const Request& r, const FieldPtr& field, Json j, Clock::time_point start) {
  const std::uint64_t points = perm::point_count(*field, r.n, r.budget);
  if (points > 9) {
    throw Error(ErrorKind::ClosureTooLarge,
                "closure needs q^n <= 9, got " + std::to_string(points) + " points");
  }
  const auto gens = standard_generators(field, r.n);
  std::vector<perm::Permutation> gen_perms;
  Json gen_text = Json::array();
  for (const auto& g : gens) {
    gen_perms.push_back(perm::induced_permutation(aut::to_polymap(g, field, r.n), r.budget));
    gen_text.push_back(text::serialize(g, *field, r.n));
  }

  std::unordered_set<std::uint64_t> seen;
  std::deque<perm::Permutation> queue;
  const auto id = perm::Permutation::identity(points);
  seen.insert(pack(id.images()));
  queue.push_back(id);
  bool all_even = true;
  while (!queue.empty()) {
    const perm::Permutation g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gen_perms) {
      perm::Permutation h = perm::compose_permutations(s, g);
      if (!seen.insert(pack(h.images())).second) continue;
      if (seen.size() > kClosureCap) {
        throw Error(ErrorKind::ClosureTooLarge, "subgroup exceeds " + std::to_string(kClosureCap) + " elements");
      }
      if (perm::permutation_sign(h) == perm::Sign::minus) all_even = false;
      queue.push_back(std::move(h));
    }
  }

  const std::uint64_t order = seen.size();
  const std::uint64_t sym = factorial(points);
  std::string group = "proper subgroup";
  if (order == sym) {
    group = "symmetric";
  } else if (all_even && 2 * order == sym) {
    group = "alternating";
  }
  j["method"] = "oracle";
  j["mode"] = "closure";
  j["generators"] = std::move(gen_text);
  j["points"] = points;
  j["order"] = order;
  j["symmetric_order"] = sym;
  j["group"] = group;
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotBijective:
    case ErrorKind::SingularMatrix:
    case ErrorKind::ZeroDiagonal:
    case ErrorKind::TailUsesEarlyVariable:
    case ErrorKind::VariableUsed:
    case ErrorKind::ZeroElement:
    case ErrorKind::DivisionByZero:
    case ErrorKind::NotStrict:
    case ErrorKind::Overflow:
    case ErrorKind::ClosureTooLarge:
      return ExitCode::math;
    default:
      return ExitCode::usage;
  }
}

Report run_sign(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  require_single_input(r);
  Json j = base(r, field);
  aut::TameWord word(field, r.n);
  if (r.word) {
    word = text::parse_word(*r.word, field, r.n);
    j["class"] = "tame word";
  } else {
    const auto map = text::parse_polymap(*r.map, field, r.n);
    check_degree(map);
    const auto classified = text::classify(map);
    j["class"] = text::class_name(classified);
    word = single(field, r.n, as_factor(classified));
  }
  const auto ws = sign::sign_tame_word(word);
  j["sign"] = perm::value(ws.total);
  j["method"] = "formula";
  j["factors"] = factor_list(ws);
  j["word"] = text::serialize(word);
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

Report run_oracle(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  Json j = base(r, field);
  const auto sigma = oracle_permutation(r, field);
  j["sign"] = perm::value(perm::permutation_sign(sigma));
  j["method"] = "oracle";
  j["points"] = sigma.size();
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

Report run_perm(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  Json j = base(r, field);
  const auto sigma = oracle_permutation(r, field);
  j["sign"] = perm::value(perm::permutation_sign(sigma));
  j["method"] = "oracle";
  j["points"] = sigma.size();
  j["cycle_count"] = perm::cycle_count(sigma);
  j["cycles"] = perm::nontrivial_cycles(sigma);
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

Report run_decompose(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  if (!r.map) usage("decompose needs --map with an affine map");
  Json j = base(r, field);
  const auto affine = text::affine_form(text::parse_polymap(*r.map, field, r.n));
  if (!affine) usage("decompose needs a map of degree <= 1");
  const auto d = sign::decompose_linear(*field, affine->matrix());
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"kind", aut::kind_name(aut::TameFactor{f})},
                       {"sign", perm::value(sign::sign_linear_factor(*field, r.n, f))},
                       {"factor", aut::to_string(f, *field)}});
  }
  j["sign"] = perm::value(sign::sign_affine(*affine));
  j["method"] = "formula";
  j["factors"] = std::move(factors);
  j["translation_sign"] = perm::value(sign::sign_translation(*field, r.n, affine->translation()));
  j["counts"] = {{"swap", d.n_swap}, {"scale", d.n_scale}, {"rowadd", d.n_rowadd}};
  j["determinant"] = field->format(affine->determinant());
  j["sign_by_cases"] = perm::value(sign::sign_affine_by_cases(*affine, d));
  j["product_matches"] = sign::factor_product(*field, r.n, d.factors) == affine->matrix();
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

Report run_random_tame(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  Json j = base(r, field);
  gen::Rng rng(r.seed);
  const auto word = gen::random_tame_word(field, r.n, r.length.value_or(3), rng);
  const auto ws = sign::sign_tame_word(word);
  j["sign"] = perm::value(ws.total);
  j["method"] = "formula";
  j["factors"] = factor_list(ws);
  j["word"] = text::serialize(word);
  j["seed"] = r.seed;
  j["timing_ms"] = ms_since(start);
  return {std::move(j), ExitCode::ok};
}

Report run_verify(const Request& r) {
  const auto start = Clock::now();
  if (r.qs.empty() && r.q == 0) usage("verify needs --qs (or --q)");
  if (r.ns.empty() && r.n == 0) usage("verify needs --ns (or --n)");
  const std::vector<std::uint64_t> qs = r.qs.empty() ? std::vector<std::uint64_t>{r.q} : r.qs;
  const std::vector<std::size_t> ns = r.ns.empty() ? std::vector<std::size_t>{r.n} : r.ns;
  const auto families = families_of(r);
  const std::uint64_t samples = r.samples.value_or(200);
  const std::size_t max_length = r.length.value_or(5);
  if (max_length == 0) usage("--length must be at least 1 for verify");
  std::optional<gen::Family> corrupt;
  if (r.corrupt_family) corrupt = gen::parse_family(*r.corrupt_family);

  std::vector<FieldPtr> fields;
  for (std::uint64_t q : qs) {
    fields.push_back(field_for(q, std::nullopt));
    for (std::size_t n : ns) {
      if (n == 0) usage("arity must be >= 1");
      perm::point_count(*fields.back(), n, r.budget);
    }
  }

  struct Job {
    std::size_t field;
    std::size_t n;
    gen::Family family;
    std::uint64_t sample;
  };
  struct Outcome {
    int formula = 0;
    int oracle = 0;
    std::uint64_t seed = 0;
    std::string word;
    std::optional<Error> error;
  };
  std::vector<Job> jobs;
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    for (std::size_t n : ns) {
      for (gen::Family fam : families) {
        for (std::uint64_t s = 0; s < samples; ++s) jobs.push_back({fi, n, fam, s});
      }
    }
  }

  std::vector<Outcome> outcomes(jobs.size());
  const std::int64_t count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < count; ++k) {
    const Job& job = jobs[k];
    Outcome& out = outcomes[k];
    try {
      const auto& field = fields[job.field];
      out.seed = gen::derive_seed(r.seed, {field->q(), job.n, static_cast<std::uint64_t>(job.family), job.sample});
      gen::Rng rng(out.seed);
      const auto word = sample_instance(job.family, field, job.n, max_length, rng);
      out.word = text::serialize(word);
      sign::Sign f = sign::sign_tame_word(word).total;
      if (corrupt == job.family) f = f * perm::Sign::minus;
      out.formula = perm::value(f);
      out.oracle = perm::value(perm::permutation_sign(perm::induced_permutation(word, r.budget)));
    } catch (const Error& e) {
      out.error = e;
    }
  }

  Json j = base(r, nullptr);
  if (qs.size() == 1) j["field"] = field_json(*fields.front());
  if (ns.size() != 1) j["n"] = nullptr;
  if (ns.size() == 1) j["n"] = ns.front();
  j["method"] = "formula vs oracle";

  Json tally = Json::array();
  std::optional<std::size_t> worst;
  std::uint64_t disagreements = 0;
  std::size_t k = 0;
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    for (std::size_t n : ns) {
      for (gen::Family fam : families) {
        std::uint64_t plus = 0, minus = 0, bad = 0;
        for (std::uint64_t s = 0; s < samples; ++s, ++k) {
          const Outcome& o = outcomes[k];
          if (o.error) throw *o.error;
          (o.oracle == 1 ? plus : minus) += 1;
          if (o.formula == o.oracle) continue;
          ++bad;
          const auto size_of = [&](std::size_t idx) {
            return std::make_pair(perm::point_count(*fields[jobs[idx].field], jobs[idx].n, r.budget),
                                  outcomes[idx].word.size());
          };
          if (!worst || size_of(k) < size_of(*worst)) worst = k;
        }
        disagreements += bad;
        tally.push_back({{"q", fields[fi]->q()},
                         {"n", n},
                         {"family", gen::family_name(fam)},
                         {"cases", samples},
                         {"plus", plus},
                         {"minus", minus},
                         {"disagreements", bad}});
      }
    }
  }

  j["cases"] = jobs.size();
  j["disagreements"] = disagreements;
  j["status"] = disagreements == 0 ? "all agree" : "disagreement";
  j["tally"] = std::move(tally);
  ExitCode code = ExitCode::ok;
  if (worst) {
    const Job& job = jobs[*worst];
    const Outcome& o = outcomes[*worst];
    const std::uint64_t q = fields[job.field]->q();
    j["counterexample"] = {{"q", q},
                           {"n", job.n},
                           {"family", gen::family_name(job.family)},
                           {"sample", job.sample},
                           {"instance_seed", o.seed},
                           {"word", o.word},
                           {"formula_sign", o.formula},
                           {"oracle_sign", o.oracle},
                           {"replay", replay_command(q, job.n, o.word)}};
    code = ExitCode::disagreement;
  }
  j["timing_ms"] = ms_since(start);
  return {std::move(j), code};
}

Report run_maubach(const Request& r) {
  const auto start = Clock::now();
  const auto field = field_for(r);
  Json j = base(r, field);
  if (r.mode == "closure") return closure(r, field, std::move(j), start);
  if (r.mode != "signs") usage("--mode must be signs or closure");

  perm::point_count(*field, r.n, r.budget);
  const std::uint64_t samples = r.samples.value_or(300);
  const std::size_t max_length = std::max<std::size_t>(1, r.length.value_or(4));
  std::uint64_t plus = 0, minus = 0, disagreements = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    gen::Rng rng(gen::derive_seed(r.seed, {s}));
    const auto word = gen::random_tame_word(field, r.n, rng.between(1, max_length), rng);
    const auto formula = sign::sign_tame_word(word).total;
    const auto oracle = perm::permutation_sign(perm::induced_permutation(word, r.budget));
    if (formula != oracle) ++disagreements;
    (oracle == perm::Sign::plus ? plus : minus) += 1;
  }
  const bool alternating = field->p() == 2 && field->m() >= 2;
  const bool consistent = alternating ? minus == 0 : (samples == 0 || (plus > 0 && minus > 0));
  j["method"] = "formula and oracle";
  j["mode"] = "signs";
  j["samples"] = samples;
  j["plus"] = plus;
  j["minus"] = minus;
  j["disagreements"] = disagreements;
  j["expected"] = alternating ? "all +1" : "both signs";
  j["consistent"] = consistent;
  j["timing_ms"] = ms_since(start);
  return {std::move(j), (consistent && disagreements == 0) ? ExitCode::ok : ExitCode::disagreement};
}

Report run(const Request& r) {
  try {
    if (r.command == "sign") return run_sign(r);
    if (r.command == "oracle") return run_oracle(r);
    if (r.command == "perm") return run_perm(r);
    if (r.command == "decompose") return run_decompose(r);
    if (r.command == "random-tame") return run_random_tame(r);
    if (r.command == "verify") return run_verify(r);
    if (r.command == "maubach") return run_maubach(r);
    usage("unknown command '" + r.command + "'");
  } catch (const Error& e) {
    Json j = base(r, nullptr);
    Json err = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const text::ParseError*>(&e)) err["offset"] = pe->offset();
    j["error"] = std::move(err);
    return {std::move(j), exit_code_for(e.kind())};
  }
}

std::string render_text(const Report& report) {
  std::string out;
  for (const auto& [key, value] : report.body.items()) {
    if (value.is_null()) continue;
    if (value.is_array() && value.empty()) continue;
    out += key + ": ";
    if (key == "sign") {
      out += value.get<int>() > 0 ? "+1" : "-1";
    } else if (key == "field") {
      std::uint64_t q = 1;
      for (std::uint32_t k = 0; k < value["m"].get<std::uint32_t>(); ++k) q *= value["p"].get<std::uint64_t>();
      out += "F_" + std::to_string(q);
      if (!value["modulus"].is_null()) out += " = F_" + value["p"].dump() + "[t]/(" + value["modulus"].get<std::string>() + ")";
    } else if (value.is_string()) {
      out += value.get<std::string>();
    } else {
      out += value.dump();
    }
    out += '\n';
  }
  return out;
}

}  // namespace tamesign::cli
