#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamesign/error.hpp"
#include "tamesign/perm.hpp"

namespace tamesign::cli {

using Json = nlohmann::ordered_json;

/// Highest total degree accepted from user input.
inline constexpr std::uint64_t kMaxInputDegree = 64;
/// Largest subgroup the closure search will enumerate.
inline constexpr std::uint64_t kClosureCap = 1'000'000;

enum class ExitCode : int { ok = 0, usage = 1, math = 2, disagreement = 3 };

struct Request {
  std::string command;
  std::uint64_t q = 0;
  std::optional<std::string> modulus;
  std::size_t n = 0;
  std::optional<std::string> map;
  std::optional<std::string> word;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  std::uint64_t budget = perm::kDefaultBudget;
  std::optional<std::size_t> length;
  std::vector<std::string> families;
  std::vector<std::uint64_t> qs;
  std::vector<std::size_t> ns;
  std::string mode = "signs";
  /// Test hook: flip every formula sign of this family inside verify.
  std::optional<std::string> corrupt_family;
};

struct Report {
  Json body;
  ExitCode exit_code = ExitCode::ok;
};

ExitCode exit_code_for(ErrorKind kind);

/// Runs one command. Library errors become a report with an "error"
/// object and the matching exit code; nothing escapes.
Report run(const Request& request);

Report run_sign(const Request& request);
Report run_oracle(const Request& request);
Report run_perm(const Request& request);
Report run_decompose(const Request& request);
Report run_random_tame(const Request& request);
Report run_verify(const Request& request);
Report run_maubach(const Request& request);

/// Plain "key: value" view of a report.
std::string render_text(const Report& report);

}  // namespace tamesign::cli
