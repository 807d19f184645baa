#include <random>

#include "cliff/fq.hpp"
#include "doctest.h"

using namespace cliff;
using namespace cliff::fq;

TEST_CASE("deterministic moduli") {
  CHECK(make_field(3, 1).q() == 3);
  CHECK(make_field(3, 2).modulus() == PolyFp{1, 0, 1});  // x^2 + 1
  CHECK(make_field(2, 3).modulus() == PolyFp{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(make_field(3, 5).modulus() == make_field(3, 5).modulus());
  CHECK_THROWS_AS(make_field(9, 1), Error);
  CHECK_THROWS_AS(FqField(3, 2, PolyFp{2, 0, 1}), Error);  // x^2 + 2 = (x + 1)(x + 2)
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 5));  // 2^2 = -1 mod 5
  // x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1) has no roots mod 5 but splits
  CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 5));
}

TEST_CASE("field axioms and Frobenius") {
  std::mt19937 rng(41);
  for (auto [p, n] : {std::pair{3u, 4u}, {5u, 3u}, {7u, 2u}, {3u, 7u}}) {
    const FqField F = make_field(p, n);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.q() - 1);
    for (int k = 0; k < 200; ++k) {
      const Element a = static_cast<Element>(pick(rng)), b = static_cast<Element>(pick(rng)),
                    c = static_cast<Element>(pick(rng));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(F.sub(a, b), b) == a);
      CHECK(F.pow(a, F.q()) == a);
      // Frobenius is additive
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.quadratic_character(F.mul(a, b)) == F.quadratic_character(a) * F.quadratic_character(b));
    }
  }
}

TEST_CASE("quadratic character") {
  const FqField F9 = make_field(3, 2);
  CHECK(F9.quadratic_character(0) == 0);
  CHECK(F9.quadratic_character(1) == 1);
  CHECK(F9.quadratic_character(F9.primitive_element()) == -1);
  int squares = 0;
  for (Element a = 1; a < F9.q(); ++a) squares += F9.quadratic_character(a) == 1;
  CHECK(squares == 4);
  CHECK_THROWS_AS(make_field(2, 2).quadratic_character(1), Error);
}

TEST_CASE("Zech logarithms") {
  for (auto [p, n] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 1u}}) {
    const FqField F = make_field(p, n);
    const ZechTables t = build_zech(F);
    CHECK(t.modulus == F.q() - 1);
    for (std::uint32_t k = 0; k < t.modulus; ++k) {
      CHECK(t.log[t.exp[k]] == k);
      const Element one_plus = F.add(1, t.exp[k]);
      if (one_plus == 0)
        CHECK(t.zech[k] == t.zero);
      else
        CHECK(t.exp[t.zech[k]] == one_plus);
      // the character is the parity of the log
      CHECK(F.quadratic_character(t.exp[k]) == (k % 2 == 0 ? 1 : -1));
    }
  }
  CHECK_THROWS_AS(build_zech(make_field(2, 3)), Error);
}
