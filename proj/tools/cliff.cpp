// Command-line front end: each subcommand runs one verification pipeline,
// prints a JSON report on stdout and a short summary on stderr.
// Exit status: 0 all checks passed, 1 some check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cliff/fixture.hpp"
#include "cliff/report.hpp"

using namespace cliff;
using report::Json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

struct Source {
  std::string fixture;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src, const char* file_flag, const char* file_help) {
  auto* fx = cmd->add_option("--fixture", src.fixture, "embedded example data")->check(CLI::IsMember({"paper"}));
  auto* fl = cmd->add_option(file_flag, src.file, file_help)->check(CLI::ExistingFile);
  fx->excludes(fl);
  fl->excludes(fx);
}

report::PfaffianProblem load_problem(const Source& src) {
  if (!src.file.empty()) return report::problem_from_json(read_json(src.file), src.file);
  if (src.fixture.empty()) throw Error("give --fixture paper or --input FILE");
  return report::example_problem();
}

report::SexticInput load_sextic(const Source& src) {
  if (!src.file.empty()) return report::sextic_from_text(slurp(src.file), src.file);
  if (src.fixture.empty()) throw Error("give --fixture paper or --poly FILE");
  return report::example_sextic();
}

int emit(const report::Report& rep, bool timing) {
  std::cout << rep.to_json(timing).dump(2) << "\n";
  std::cerr << rep.summary();
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice, pfaffian and point-count checks for cubic fourfolds in C8 and C14"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit wall times so reports are byte-identical across runs");

  auto* classify = app.add_subcommand("classify", "components of C8 meet C14 by lattice theory");

  Source pf_src;
  bool print_input = false;
  auto* verify = app.add_subcommand("verify-pfaffian", "pfaffian, smoothness, sextic, tangency and Clifford checks");
  add_source(verify, pf_src, "--input", "JSON problem file (keys matrix, cubic, d, f, g, conic, a, b, c, bundle)");
  verify->add_flag("--print-input", print_input, "print the resolved problem as JSON and stop");

  Source q_src;
  auto* quaternion = app.add_subcommand("quaternion", "quaternion symbol of the quadric bundle");
  add_source(quaternion, q_src, "--input", "JSON problem file");

  report::CountOptions count_opt;
  Source count_src;
  auto* count = app.add_subcommand("count-points", "points on the double plane branched along d");
  add_source(count, count_src, "--poly", "file holding the sextic d(x, y, z)");
  count->add_option("--p", count_opt.p, "odd prime")->capture_default_str();
  count->add_option("--max-n", count_opt.max_n, "count over F_{p^n}, n = 1..max-n")->capture_default_str();
  count->add_flag("--deep", count_opt.deep, "allow max-n above 9");
  count->add_option("--threads", count_opt.threads, "OpenMP threads (0 = default)");

  std::string counts_file;
  std::uint32_t charpoly_p = 3;
  std::string charpoly_fixture;
  auto* charpoly = app.add_subcommand("charpoly", "Frobenius characteristic polynomial from point counts");
  charpoly->add_option("--counts", counts_file, "JSON {n: count} or a count-points report")
      ->required()
      ->check(CLI::ExistingFile);
  charpoly->add_option("--p", charpoly_p, "odd prime")->capture_default_str();
  charpoly->add_option("--fixture", charpoly_fixture, "compare with the example's normalized polynomial")
      ->check(CLI::IsMember({"paper"}));

  report::CountOptions picard_opt;
  Source picard_src;
  auto* picard = app.add_subcommand("picard-bound", "counts, characteristic polynomial and Picard bound");
  add_source(picard, picard_src, "--poly", "file holding the sextic d(x, y, z)");
  picard->add_option("--p", picard_opt.p, "odd prime of good reduction")->capture_default_str();
  picard->add_option("--max-n", picard_opt.max_n, "count over F_{p^n}, n = 1..max-n")->capture_default_str();
  picard->add_flag("--deep", picard_opt.deep, "allow max-n above 9");
  picard->add_option("--threads", picard_opt.threads, "OpenMP threads (0 = default)");

  Source bad_src;
  std::uint32_t max_p = 10000;
  auto* bad = app.add_subcommand("bad-primes", "odd primes p <= max-p where d mod p is singular");
  add_source(bad, bad_src, "--poly", "file holding the sextic d(x, y, z)");
  bad->add_option("--max-p", max_p, "scan bound")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const bool timing = !no_timing;

  try {
    if (*classify) return emit(report::cmd_classify(), timing);
    if (*verify) {
      const auto problem = load_problem(pf_src);
      if (print_input) {
        std::cout << report::to_json(problem).dump(2) << "\n";
        return 0;
      }
      return emit(report::cmd_verify_pfaffian(problem), timing);
    }
    if (*quaternion) return emit(report::cmd_quaternion(load_problem(q_src)), timing);
    if (*count) return emit(report::cmd_count_points(load_sextic(count_src), count_opt), timing);
    if (*charpoly) {
      const auto counts = report::counts_from_json(read_json(counts_file));
      std::optional<std::vector<Rational>> expected;
      std::optional<int> expected_bound;
      if (!charpoly_fixture.empty() && charpoly_p == 3) {
        expected = fixture::example().phi_tilde;
        expected_bound = 2;
      }
      return emit(report::cmd_charpoly(counts, charpoly_p, expected, expected_bound), timing);
    }
    if (*picard) return emit(report::cmd_picard(load_sextic(picard_src), picard_opt), timing);
    if (*bad) return emit(report::cmd_bad_primes(load_sextic(bad_src), max_p), timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
