#include "cliff/fixture.hpp"
#include "cliff/report.hpp"
#include "doctest.h"

using namespace cliff;
using namespace cliff::report;

namespace {

Status status_of(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, "missing check " << name);
  return c->status;
}

std::vector<std::string> failing(const Report& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (c.status == Status::fail) out.push_back(c.name);
  return out;
}

}  // namespace

TEST_CASE("classify is deterministic") {
  const Report a = cmd_classify(), b = cmd_classify();
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(status_of(a, "scan") == Status::pass);
  CHECK(status_of(a, "discriminant groups") == Status::pass);
  CHECK(status_of(a, "root exclusions") == Status::pass);
  const Json j = a.to_json(false);
  CHECK(j["schema"] == 1);
  CHECK_FALSE(j.contains("timing"));
  CHECK(a.to_json(true).contains("timing"));
}

TEST_CASE("verify-pfaffian on the fixture passes everything") {
  const Report r = cmd_verify_pfaffian(example_problem());
  INFO(r.to_json(false).dump(2));
  CHECK(r.ok());
  for (const char* name : {"pfaffian", "plane containment", "X smooth", "quadric bundle", "discriminant sextic",
                           "D smooth", "tangency identity", "tangency points", "quaternion symbol"})
    CHECK_MESSAGE(status_of(r, name) == Status::pass, name);
}

TEST_CASE("a perturbed g breaks only the tangency checks") {
  PfaffianProblem problem = example_problem();
  problem.is_example = false;
  problem.g += " + x^3";
  const Report r = cmd_verify_pfaffian(problem);
  const auto bad = failing(r);
  REQUIRE_FALSE(bad.empty());
  for (const auto& name : bad) CHECK_MESSAGE(name.rfind("tangency", 0) == 0, name);
  CHECK(status_of(r, "tangency identity") == Status::fail);
  CHECK(status_of(r, "quadric bundle") == Status::pass);
}

TEST_CASE("a cubic missing the plane skips the bundle") {
  Json m = Json::array();
  for (int i = 0; i < 6; ++i) m.push_back(Json::array({"0", "0", "0", "0", "0", "0"}));
  m[0][1] = "u";
  m[2][3] = "v";
  m[4][5] = "w + x";
  const PfaffianProblem problem = problem_from_json({{"matrix", m}}, "inline");
  const Report r = cmd_verify_pfaffian(problem);
  CHECK(status_of(r, "plane containment") == Status::fail);
  CHECK(status_of(r, "quadric bundle") == Status::skipped);
  CHECK(status_of(r, "quaternion symbol") == Status::skipped);
  CHECK_FALSE(r.ok());
}

TEST_CASE("problem JSON round-trips") {
  const PfaffianProblem p = example_problem();
  const PfaffianProblem back = problem_from_json(to_json(p), "roundtrip");
  CHECK(back.matrix == p.matrix);
  CHECK(back.d == p.d);
  CHECK(back.bundle == p.bundle);
  CHECK_THROWS_AS(problem_from_json(Json::object(), "empty"), std::exception);
}

TEST_CASE("picard-bound refuses a bad prime") {
  CountOptions o;
  o.p = 5;
  o.max_n = 2;
  const Report r = cmd_picard(example_sextic(), o);
  CHECK(status_of(r, "good reduction") == Status::fail);
  CHECK(status_of(r, "charpoly") == Status::skipped);
  CHECK_FALSE(r.ok());
}

TEST_CASE("shallow counts give a partial characteristic polynomial") {
  CountOptions o;
  o.max_n = 4;
  const Report r = cmd_picard(example_sextic(), o);
  CHECK(r.ok());
  CHECK(status_of(r, "reference agreement") == Status::pass);
  CHECK(status_of(r, "charpoly") == Status::skipped);
  CHECK(r.data.contains("partial"));
  CHECK(r.data["counts"].size() == 4);
}

TEST_CASE("count options are validated") {
  CountOptions o;
  o.max_n = 10;
  CHECK_THROWS_AS(cmd_count_points(example_sextic(), o), Error);
  o.deep = true;
  o.max_n = 16;
  CHECK_THROWS_AS(cmd_count_points(example_sextic(), o), Error);
  o = CountOptions{};
  o.p = 9;
  CHECK_THROWS_AS(cmd_count_points(example_sextic(), o), Error);
  o.p = 2;
  CHECK_THROWS_AS(cmd_count_points(example_sextic(), o), Error);
}

TEST_CASE("counts JSON round-trips, bare or wrapped") {
  const CountTable t{{1, 14}, {2, 96}, {3, 800}};
  CHECK(counts_from_json(counts_to_json(t)) == t);
  CountOptions o;
  o.max_n = 3;
  const Report r = cmd_count_points(example_sextic(), o);
  const CountTable from_report = counts_from_json(r.to_json(false));
  CHECK(from_report.size() == 3);
  CHECK_THROWS_AS(counts_from_json(Json{{"1", 14}, {"3", 800}}), Error);
}

TEST_CASE("charpoly from three counts stays partial") {
  CountOptions o;
  o.max_n = 3;
  const auto counts = counts_from_json(cmd_count_points(example_sextic(), o).to_json(false));
  const Report r = cmd_charpoly(counts, 3);
  CHECK(status_of(r, "weil bound") == Status::pass);
  CHECK(status_of(r, "charpoly") == Status::skipped);
}

TEST_CASE("bad-primes scan bounds") {
  const Report small = cmd_bad_primes(example_sextic(), 100);
  CHECK(small.ok());
  CHECK(small.data["bad"] == Json::array({5, 23}));
  const Report tiny = cmd_bad_primes(example_sextic(), 4);
  CHECK(tiny.data["bad"].empty());
  CHECK(status_of(tiny, "matches listed primes") == Status::pass);
  const Report other = cmd_bad_primes(sextic_from_text("x^6 + y^6 + z^6", "inline"), 20);
  CHECK(other.find("matches listed primes") == nullptr);
  // every partial of x^6 + y^6 + z^6 vanishes mod 3, so the Jacobian test says nothing there
  CHECK(other.data["bad"].empty());
  CHECK(other.data["skipped"] == Json::array({3}));
}
