#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliff/pointcount.hpp"
#include "json.hpp"

namespace cliff::report {

using Json = nlohmann::ordered_json;
using poly::MultiPoly;

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::skipped;
  Json witness;
  double seconds = 0;
};

/// Output of one subcommand. Everything except `timing` is deterministic.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Check> checks;
  Json data = Json::object();

  /// Times `body`; an exception becomes a failed check carrying the message.
  Check& run(const std::string& name, const std::function<Status(Json& witness)>& body);
  Check& skip(const std::string& name, const std::string& reason);
  const Check* find(const std::string& name) const;
  bool ok() const;  // every non-skipped check passed
  Json to_json(bool with_timing = true) const;
  std::string summary() const;
};

Json to_json(const Integer& n);
Json to_json(const Rational& r);

/// Polynomial text for the pfaffian pipeline. Empty strings mean "not given";
/// checks that need them are skipped.
struct PfaffianProblem {
  std::string source;
  bool is_example = false;
  std::vector<std::vector<std::string>> matrix;  // 6x6, upper triangle read
  std::string cubic, d, f, g, conic, a, b, c;
  std::vector<std::vector<std::string>> bundle;  // 4x4 or empty
};
PfaffianProblem example_problem();
/// Keys: matrix (6x6 array of strings, only i < j read), cubic, d, f, g,
/// conic, a, b, c, bundle. Only `matrix` is required.
PfaffianProblem problem_from_json(const Json& j, const std::string& source);
Json to_json(const PfaffianProblem& problem);

/// A plane sextic d(x, y, z) plus what is known about it.
struct SexticInput {
  std::string source;
  bool is_example = false;
  MultiPoly d;
};
SexticInput example_sextic();
SexticInput sextic_from_text(const std::string& text, const std::string& source);

struct CountOptions {
  std::uint32_t p = 3;
  unsigned max_n = 9;
  bool deep = false;
  int threads = 0;
};

/// Default depth limit without `deep`.
constexpr unsigned kShallowDepth = 9;
/// Depth needed to pin down the degree-22 characteristic polynomial.
constexpr unsigned kFullDepth = 11;

using CountTable = std::map<unsigned, std::uint64_t>;
Json counts_to_json(const CountTable& counts);
/// Accepts a bare {"n": count} object or a full count-points report.
CountTable counts_from_json(const Json& j);

Report cmd_classify();
Report cmd_verify_pfaffian(const PfaffianProblem& problem);
Report cmd_quaternion(const PfaffianProblem& problem);
Report cmd_count_points(const SexticInput& input, const CountOptions& options);
/// `expected_phi_tilde` turns on the comparison with a known normalized
/// polynomial.
Report cmd_charpoly(const CountTable& counts, std::uint32_t p,
                    const std::optional<std::vector<Rational>>& expected_phi_tilde = std::nullopt,
                    std::optional<int> expected_bound = std::nullopt);
Report cmd_picard(const SexticInput& input, const CountOptions& options);
Report cmd_bad_primes(const SexticInput& input, std::uint32_t max_p);

/// Bad primes of the fixture sextic as listed with the example.
std::vector<std::uint32_t> listed_bad_primes();

}  // namespace cliff::report
