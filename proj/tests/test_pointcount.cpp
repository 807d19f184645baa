#include <algorithm>
#include <random>

#include "cliff/fixture.hpp"
#include "cliff/pointcount.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "properties.hpp"

using namespace cliff;
using namespace cliff::pointcount;

namespace {

const std::pair<std::uint32_t, unsigned> kSmallFields[] = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1},
                                                            {5, 2}, {7, 1}, {7, 2}};

MultiPoly random_sextic(std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  MultiPoly f;
  for (std::uint16_t i = 0; i <= 6; ++i)
    for (std::uint16_t j = 0; i + j <= 6; ++j) {
      poly::Exponent e{};
      e[poly::Var::X] = static_cast<std::uint16_t>(6 - i - j);
      e[poly::Var::Y] = i;
      e[poly::Var::Z] = j;
      if (rng() % 3 == 0) f += MultiPoly::monomial(e, Rational(coeff(rng)));
    }
  return f + poly::parse("x^6 + y^6 + z^6");
}

}  // namespace

TEST_CASE("fast count agrees with the naive oracle for odd q <= 81") {
  std::mt19937 rng(5);
  std::vector<MultiPoly> sextics{fixture::example().d, poly::parse("x^6 + y^6 + z^6"), random_sextic(rng),
                                 random_sextic(rng)};
  for (const auto& d : sextics)
    for (auto [p, n] : kSmallFields) {
      const fq::FqField F = fq::make_field(p, n);
      const std::uint64_t want = oracle::naive_double_cover_count(d, p, static_cast<int>(n));
      CAPTURE(p);
      CAPTURE(n);
      CHECK(count_points_double_cover(d, F) == want);
      CHECK(count_points_reference(d, F) == want);
    }
}

TEST_CASE("degenerate sextic x^6") {
  const MultiPoly d = poly::parse("x^6");
  for (auto [p, n] : kSmallFields) {
    const std::uint64_t q = fq::make_field(p, n).q();
    CHECK(count_points_double_cover(d, fq::make_field(p, n)) == 2 * q * q + q + 1);
  }
}

TEST_CASE("thread count does not change the result") {
  const MultiPoly& d = fixture::example().d;
  const fq::FqField F = fq::make_field(3, 6);
  const auto zech = fq::build_zech(F);
  const std::uint64_t one = count_points_double_cover(d, F, zech, 1);
  CHECK(count_points_double_cover(d, F, zech, 4) == one);
  CHECK(count_points_double_cover(d, F, zech, 3) == one);
}

TEST_CASE("fixture counts satisfy the Weil bound") {
  const auto counts = count_series(fixture::example().d, 3, 6);
  const auto traces = traces_from_counts(counts, 3);
  Integer pn = 1;
  for (const auto& t : traces) {
    pn *= 3;
    CHECK(abs(t) <= 22 * pn);
  }
}

TEST_CASE("traces from counts") {
  const auto t = traces_from_counts({1 + 9 + 4, 1 + 81}, 3);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == 4);
  CHECK(t[1] == 0);
}

TEST_CASE("Newton reconstruction round-trips on synthetic Weil polynomials") {
  const auto out = props::newton_roundtrip(50, 2024);
  INFO(props::describe(out));
  CHECK(out.ok());
}

TEST_CASE("all eigenvalues equal to p") {
  std::vector<Integer> traces;
  Integer pn = 1;
  for (int n = 1; n <= 11; ++n) {
    pn *= 5;
    traces.push_back(22 * pn);
  }
  const Charpoly cp = charpoly_from_traces(traces, 5);
  CHECK(cp.epsilon == 1);
  CHECK(picard_bound(cp) == 22);
  CHECK(cp.phi_tilde[0] == 1);
  CHECK(cp.phi_tilde[21] == -22);
}

TEST_CASE("charpoly input validation") {
  CHECK_THROWS_AS(charpoly_from_traces(std::vector<Integer>(10, Integer(0)), 3), Error);
  // all traces zero: only t^22 - p^22 survives, and every root of phi~ is a root of unity
  const Charpoly zero = charpoly_from_traces(std::vector<Integer>(11, Integer(0)), 3);
  CHECK(zero.epsilon == -1);
  CHECK(picard_bound(zero) == 22);
  // 11 traces from an unrelated polynomial with no root at p
  std::vector<Integer> traces;
  Integer pn = 1;
  for (int n = 1; n <= 11; ++n) {
    pn *= 3;
    traces.push_back(21 * pn);
  }
  CHECK_THROWS_AS(charpoly_from_traces(traces, 3), Error);
}

TEST_CASE("partial charpoly") {
  const auto part = partial_charpoly({Integer(4), Integer(0), Integer(-8)}, 3);
  CHECK(part.known.size() == 4);
  CHECK(part.known[1] == 4);
  CHECK(part.known[2] == 8);  // (s1^2 - s2) / 2
  CHECK(part.unknown.front() == 4);
  CHECK(part.unknown.back() == 18);
  CHECK(part.relations.size() == 4);
}

TEST_CASE("cyclotomic polynomials and root counts") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2
  const auto c105 = cyclotomic_polynomial(105);
  CHECK(c105.size() == 49);
  CHECK(std::count(c105.begin(), c105.end(), Integer(-2)) == 2);
  CHECK(cyclotomic_root_count({1, 0, -1, 0, 1}) == 4);
  CHECK(cyclotomic_root_count({-2, 0, 1}) == 0);
  std::vector<Integer> ones{1};
  for (int i = 0; i < 22; ++i) ones = oracle::multiply(ones, {-1, 1});
  std::vector<Rational> r(ones.begin(), ones.end());
  CHECK(cyclotomic_root_count(r) == 22);
  // t^2 - t/3 + 1 has roots on the unit circle that are not roots of unity
  CHECK(cyclotomic_root_count({1, Rational(-1, 3), 1}) == 0);
}

TEST_CASE("fixture phi-tilde has exactly two cyclotomic roots") {
  const auto& phi = fixture::example().phi_tilde;
  REQUIRE(phi.size() == 23);
  CHECK(cyclotomic_root_count(phi) == 2);
  // 3^22 phi~(t/3) is an integer polynomial vanishing at 3
  std::vector<Integer> ints;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Rational c = phi[i] * Rational(pow_int(Integer(3), 22 - i));
    ints.push_back(c.get_num());
    CHECK(c.get_den() == 1);
  }
  Integer at3 = 0;
  for (std::size_t i = ints.size(); i-- > 0;) at3 = at3 * 3 + ints[i];
  CHECK(at3 == 0);
  CHECK(normalize_charpoly(ints, 3) == phi);
}
