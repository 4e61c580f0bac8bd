#include <iostream>

#include "CLI11.hpp"
#include "tamesign/cli.hpp"

int main(int argc, char** argv) {
  using tamesign::cli::Request;
  Request req;
  CLI::App app{"Signs of permutations induced by polynomial automorphisms over finite fields"};
  app.add_option("command", req.command, "sign | oracle | perm | decompose | random-tame | verify | maubach")
      ->required()
      ->check(CLI::IsMember({"sign", "oracle", "perm", "decompose", "random-tame", "verify", "maubach"}));
  app.add_option("--q", req.q, "field order p^m");
  app.add_option("--modulus", req.modulus, "irreducible modulus in t, e.g. \"t^2+t+1\"");
  app.add_option("--n", req.n, "number of variables");
  app.add_option("--map", req.map, "polynomial map, e.g. \"(X1 + X2*X3, X2, X3)\"");
  app.add_option("--word", req.word, "tame word, e.g. \"T(1,2) ; D(1,2)\"");
  app.add_option("--samples", req.samples, "instances per case (verify, maubach)");
  app.add_option("--seed", req.seed, "random seed")->capture_default_str();
  app.add_option("--budget", req.budget, "maximum q^n for enumeration")->capture_default_str();
  app.add_option("--length", req.length, "word length (random-tame) or maximum length (verify, maubach)");
  app.add_option("--families", req.families, "elementary, linear, affine, triangular, tame or all")->delimiter(',');
  app.add_option("--qs,--q-list", req.qs, "field orders for verify")->delimiter(',');
  app.add_option("--ns,--n-list", req.ns, "arities for verify")->delimiter(',');
  app.add_option("--mode", req.mode, "maubach mode: signs or closure")->capture_default_str();
  app.add_option("--corrupt-family", req.corrupt_family)->group("");
  bool json = false;
  app.add_flag("--json", json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(tamesign::cli::ExitCode::usage);
  }

  const auto report = tamesign::cli::run(req);
  if (json) {
    std::cout << report.body.dump(2) << '\n';
  } else if (report.body.contains("error")) {
    std::cerr << "error: " << report.body["error"]["message"].get<std::string>() << '\n';
  } else {
    std::cout << tamesign::cli::render_text(report);
  }
  return static_cast<int>(report.exit_code);
}
