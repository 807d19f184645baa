#include <Eigen/Dense>

#include <algorithm>
#include <random>

#include "cliff/lattice.hpp"
#include "cliff/moduli.hpp"
#include "doctest.h"

using namespace cliff;
using namespace cliff::lattice;

namespace {

GramLattice a_tau_lattice(long tau) { return moduli::a_tau(tau).lattice; }

Sublattice primitive(long tau) { return moduli::primitive_part(moduli::a_tau(tau)); }

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

bool contains_up_to_sign(const std::vector<IntVector>& vs, const IntVector& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end() || std::find(vs.begin(), vs.end(), negated(v)) != vs.end();
}

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, long lo, long hi, bool even) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long v = dist(rng);
      if (i == j && even) v *= 2;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

// Independent oracle: every coordinate box point, bound from G^{-1}.
long brute_force_norm_count(const IntMatrix& g, long target) {
  const std::size_t n = g.rows();
  Eigen::MatrixXd gd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gd(i, j) = g(i, j).get_d();
  Eigen::MatrixXd inv = gd.inverse();
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = static_cast<long>(std::sqrt(target * inv(i, i)) + 1.0);
  long count = 0;
  std::vector<long> x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += x[i] * g(i, j).get_si() * x[j];
      if (s == target) ++count;
      return;
    }
    for (long v = -bound[k]; v <= bound[k]; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;  // counts both signs
}

}  // namespace

TEST_CASE("discriminants of the fixture lattices") {
  CHECK(discriminant(a_tau_lattice(0)) == 32);
  CHECK(discriminant(GramLattice(IntMatrix{{3, 1}, {1, 3}})) == 8);
  CHECK(discriminant(GramLattice(IntMatrix{{3}})) == 3);
  for (long tau = -6; tau <= 8; ++tau)
    CHECK(discriminant(a_tau_lattice(tau)) == moduli::a_tau_discriminant_formula(tau));
}

TEST_CASE("Sylvester positivity") {
  CHECK(is_positive_definite(a_tau_lattice(0)));
  CHECK(discriminant(a_tau_lattice(5)) == -3);
  CHECK_FALSE(is_positive_definite(a_tau_lattice(5)));
  CHECK(is_positive_definite(GramLattice(IntMatrix{{2}})));
}

TEST_CASE("Gram matrices must be symmetric") {
  CHECK_THROWS_AS(GramLattice(IntMatrix{{2, 1}, {0, 2}}), Error);
}

TEST_CASE("norm-2 vectors of the primitive part") {
  auto tau_m2 = vectors_of_norm(primitive(-2), 2);
  REQUIRE(tau_m2.size() == 1);
  CHECK(contains_up_to_sign(tau_m2, iv({-2, 2, 1})));
  // (2,-10,1) lies in <h^2>^perp but has norm 298 - 20 tau = 338 at tau = -2
  CHECK(a_tau_lattice(-2).norm(iv({2, -10, 1})) == 338);

  auto tau_4 = vectors_of_norm(primitive(4), 2);
  REQUIRE(tau_4.size() == 1);
  CHECK(contains_up_to_sign(tau_4, iv({1, 1, -1})));

  auto unit = vectors_of_norm(Sublattice::whole(GramLattice(IntMatrix{{2}})), 2);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == iv({1}));
}

TEST_CASE("vectors_of_norm rejects indefinite forms") {
  CHECK_THROWS_AS(vectors_of_norm(Sublattice::whole(GramLattice(IntMatrix{{0, 1}, {1, 0}})), 2), Error);
}

TEST_CASE("short roots") {
  CHECK(short_roots(primitive(0)).empty());
  CHECK_FALSE(short_roots(primitive(-2)).empty());
  CHECK(short_roots(Sublattice::whole(GramLattice(IntMatrix{{4}}))).empty());
}

TEST_CASE("long roots") {
  CHECK(long_roots(primitive(1)).empty());
  auto ovs = proper_overlattices(primitive(0).induced());
  REQUIRE(ovs.size() == 1);
  CHECK(ovs[0].index == 2);
  CHECK_FALSE(long_roots(Sublattice::whole(ovs[0].lattice)).empty());
  auto six = long_roots(Sublattice::whole(GramLattice(IntMatrix{{6}})));
  REQUIRE(six.size() == 1);
  CHECK(six[0] == iv({1}));
}

TEST_CASE("long roots relative to h^2 separate tau = -1, 2 from tau = -2") {
  const IntVector h2 = iv({1, 0, 0});
  // intrinsic divisibility alone flags these
  CHECK(contains_up_to_sign(long_roots(primitive(-1)), iv({-2, 2, 1})));
  CHECK(contains_up_to_sign(long_roots(primitive(2)), iv({1, 1, -1})));
  CHECK(long_roots_relative(primitive(-1), h2).empty());
  CHECK(long_roots_relative(primitive(2), h2).empty());
  auto tm2 = long_roots_relative(primitive(-2), h2);
  REQUIRE(tm2.size() == 1);
  CHECK(contains_up_to_sign(tm2, iv({-5, 3, 3})));
  for (long tau = -1; tau <= 3; ++tau) CHECK(long_roots_relative(primitive(tau), h2).empty());
}

TEST_CASE("orthogonal complements") {
  Sublattice k8_0{a_tau_lattice(0), {iv({1, 0, 0}), iv({0, 1, 0})}};
  Sublattice c0 = orthogonal_complement(k8_0);
  REQUIRE(c0.rank() == 1);
  CHECK(contains_up_to_sign(c0.basis, iv({3, -1, -2})));
  CHECK(discriminant(c0.induced()) == 16);
  CHECK(is_saturated(c0));

  GramLattice tau4_type(IntMatrix{{3, 1, 4}, {1, 3, 4}, {4, 4, 12}});
  Sublattice c4 = orthogonal_complement(Sublattice{tau4_type, {iv({1, 0, 0}), iv({0, 1, 0})}});
  REQUIRE(c4.rank() == 1);
  CHECK(contains_up_to_sign(c4.basis, iv({1, 1, -1})));
  CHECK(discriminant(c4.induced()) == 4);

  Sublattice e1{GramLattice(IntMatrix::identity(2)), {iv({1, 0})}};
  Sublattice c = orthogonal_complement(e1);
  REQUIRE(c.rank() == 1);
  CHECK(c.basis[0] == iv({0, 1}));
}

TEST_CASE("primitive part agrees with the computed complement of h^2") {
  for (long tau = -2; tau <= 4; ++tau) {
    GramLattice a = a_tau_lattice(tau);
    Sublattice comp = orthogonal_complement(Sublattice{a, {iv({1, 0, 0})}});
    Sublattice listed = primitive(tau);
    CHECK(is_saturated(listed));
    CHECK(discriminant(comp.induced()) == discriminant(listed.induced()));
    CHECK(lattice_basis(comp.basis_matrix()).cols() == 2);
    // same span: each basis reduces the other's echelon form to itself
    IntMatrix stacked(3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      stacked(i, 0) = comp.basis[0][i];
      stacked(i, 1) = comp.basis[1][i];
      stacked(i, 2) = listed.basis[0][i];
      stacked(i, 3) = listed.basis[1][i];
    }
    IntMatrix joint = lattice_basis(stacked);
    CHECK(abs(determinant(joint.transpose() * a.gram() * joint)) == abs(discriminant(listed.induced())));
  }
}

TEST_CASE("discriminant groups") {
  auto a2 = discriminant_group(GramLattice(IntMatrix{{2, 1}, {1, 2}}));
  CHECK(a2.invariants() == std::vector<long>{3});
  CHECK(a2.q({1}) == Rational(2, 3));

  moduli::ATau t0 = moduli::a_tau(0);
  auto q0 = discriminant_form(t0.lattice, moduli::alternate_form_gram(t0));
  CHECK(q0.invariants() == std::vector<long>{2, 16});
  moduli::ATau t1 = moduli::a_tau(1);
  CHECK(discriminant_form(t1.lattice, moduli::alternate_form_gram(t1)).invariants() == std::vector<long>{37});

  CHECK_THROWS_AS(discriminant_group(a_tau_lattice(0)), Error);  // odd diagonal
  CHECK_THROWS_AS(discriminant_group(GramLattice(IntMatrix{{2, 2}, {2, 2}})), Error);
}

TEST_CASE("finite quadratic form axioms on A_tau^*/A_tau") {
  for (long tau = -1; tau <= 3; ++tau) {
    moduli::ATau a = moduli::a_tau(tau);
    auto q = discriminant_form(a.lattice, moduli::alternate_form_gram(a));
    CHECK(q.order() == abs(discriminant(a.lattice)));
    auto els = q.elements();
    for (const auto& x : els) {
      FiniteQuadraticForm::Element neg(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) neg[i] = (q.invariants()[i] - x[i]) % q.invariants()[i];
      CHECK(q.q(neg) == q.q(x));
      for (const auto& y : els) {
        Rational lhs = mod_rational(q.q(q.add(x, y)) - q.q(x) - q.q(y), 2);
        CHECK(lhs == mod_rational(2 * q.b(x, y), 2));
      }
    }
  }
}

TEST_CASE("Milgram signatures of small forms") {
  CHECK(milgram_signature(discriminant_group(GramLattice(IntMatrix{{0, 1}, {1, 0}}))) == 0);
  CHECK(milgram_signature(discriminant_group(GramLattice(IntMatrix{{2, -1}, {-1, 2}}))) == 2);
  CHECK(milgram_signature(discriminant_group(GramLattice(IntMatrix{{2}}))) == 1);
}

TEST_CASE("overlattices") {
  CHECK(proper_overlattices(primitive(1).induced()).empty());
  Integer d = discriminant(primitive(0).induced());
  for (const auto& ov : proper_overlattices(primitive(0).induced())) {
    CHECK(d % (ov.index * ov.index) == 0);
    CHECK(discriminant(ov.lattice) * ov.index * ov.index == d);
    CHECK_FALSE(long_roots(Sublattice::whole(ov.lattice)).empty());
  }
  auto two = proper_overlattices(primitive(2).induced());
  CHECK(two.size() == 3);
  for (const auto& ov : two) CHECK_FALSE(long_roots(Sublattice::whole(ov.lattice)).empty());
  CHECK(proper_overlattices(GramLattice(IntMatrix{{0, 1}, {1, 0}})).empty());
}

TEST_CASE("property: discriminant scales by the squared index") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> small(-4, 4);
  int checked = 0;
  while (checked < 100) {
    std::size_t n = 1 + rng() % 3;
    IntMatrix g = random_symmetric(rng, n, -6, 6, false);
    if (determinant(g) == 0) continue;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small(rng);
    Integer e = abs(determinant(m));
    if (e == 0) continue;
    GramLattice lat(g);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m.column(j));
    Sublattice sub{lat, cols};
    CHECK(discriminant(sub.induced()) == e * e * discriminant(lat));
    ++checked;
  }
}

TEST_CASE("property: orthogonal complements are saturated") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> small(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 3;
    IntMatrix g = random_symmetric(rng, n, -5, 5, false);
    if (determinant(g) == 0) continue;
    IntVector v(n);
    for (auto& x : v) x = small(rng);
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) continue;
    GramLattice lat(g);
    Sublattice comp = orthogonal_complement(Sublattice{lat, {v}});
    CHECK(comp.rank() == n - 1);
    CHECK(is_saturated(comp));
    for (const auto& w : comp.basis) CHECK(lat.pair(v, w) == 0);
  }
}

TEST_CASE("property: norm enumeration is exhaustive") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 80) {
    std::size_t n = 1 + rng() % 3;
    IntMatrix g = random_symmetric(rng, n, -10, 10, false);
    GramLattice lat(g);
    if (!is_positive_definite(lat)) continue;
    long target = 1 + static_cast<long>(rng() % 30);
    auto found = vectors_of_norm(Sublattice::whole(lat), target);
    CHECK(static_cast<long>(2 * found.size()) == brute_force_norm_count(g, target));
    for (const auto& v : found) CHECK(lat.norm(v) == target);
    ++checked;
  }
}

TEST_CASE("property: Milgram signature matches the real signature mod 8") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 100) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix g = random_symmetric(rng, n, -4, 4, true);
    Integer det = determinant(g);
    if (det == 0 || abs(det) > 3000) continue;
    Eigen::MatrixXd gd(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gd(i, j) = g(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gd);
    int sig = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) sig += es.eigenvalues()(i) > 0 ? 1 : -1;
    auto form = discriminant_group(GramLattice(g));
    CHECK(form.order() == abs(det));
    CHECK(milgram_signature(form) == ((sig % 8) + 8) % 8);
    ++checked;
  }
}

TEST_CASE("Smith normal form transforms") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4;
    std::size_t c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 13) - 6;
    SmithForm s = smith_normal_form(m);
    IntMatrix d = s.left * m * s.right;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i == j) {
          CHECK(d(i, j) == s.diagonal[i]);
        } else {
          CHECK(d(i, j) == 0);
        }
      }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
  }
}
