#include <set>

#include "cliff/moduli.hpp"
#include "doctest.h"

using namespace cliff;
using namespace cliff::moduli;

TEST_CASE("A_tau construction") {
  ATau a0 = a_tau(0);
  CHECK(a0.lattice.gram() == IntMatrix{{3, 1, 4}, {1, 3, 0}, {4, 0, 10}});
  CHECK(lattice::discriminant(a_tau(2).lattice) == 36);
  CHECK(lattice::discriminant(a_tau(4).lattice) == 16);
  CHECK(a0.lattice.labels() == std::vector<std::string>{"h2", "P", "T"});
}

TEST_CASE("K8 and K14 sit inside A_tau") {
  for (long tau = -3; tau <= 5; ++tau) {
    ATau a = a_tau(tau);
    Sublattice k8{a.lattice, {IntVector{1, 0, 0}, IntVector{0, 1, 0}}};
    Sublattice k14{a.lattice, {IntVector{1, 0, 0}, IntVector{0, 0, 1}}};
    CHECK(k8.induced().gram() == IntMatrix{{3, 1}, {1, 3}});
    CHECK(k14.induced().gram() == IntMatrix{{3, 4}, {4, 10}});
  }
}

TEST_CASE("classification of the positivity window") {
  auto reports = classify_components();
  REQUIRE(reports.size() == 7);
  std::set<long> admissible;
  std::vector<Integer> discs;
  for (const auto& r : reports) {
    if (!r.admissible) continue;
    admissible.insert(r.tau);
    discs.push_back(r.discriminant);
    CHECK(r.signature_mod8 == 0);
    CHECK(r.disc_group.primary_decomposition() == expected_group(r.tau));
    CHECK(r.disc_group.order() == abs(r.discriminant));
    CHECK(r.overlattice_status != OverlatticeStatus::some_lack_long_roots);
  }
  CHECK(admissible == std::set<long>{-1, 0, 1, 2, 3});
  CHECK(discs == std::vector<Integer>{21, 32, 37, 36, 29});

  const auto& m2 = reports.front();
  CHECK(m2.tau == -2);
  REQUIRE(m2.short_root_witnesses.size() == 1);
  CHECK((m2.short_root_witnesses[0] == IntVector{2, -2, -1}));
  const auto& p4 = reports.back();
  REQUIRE(p4.short_root_witnesses.size() == 1);
  CHECK((p4.short_root_witnesses[0] == IntVector{1, 1, -1}));
}

TEST_CASE("overlattice status per component") {
  CHECK(analyze_component(-1).overlattice_status == OverlatticeStatus::none_exist);
  CHECK(analyze_component(1).overlattice_status == OverlatticeStatus::none_exist);
  CHECK(analyze_component(3).overlattice_status == OverlatticeStatus::none_exist);
  auto r0 = analyze_component(0);
  CHECK(r0.overlattice_status == OverlatticeStatus::all_have_long_roots);
  CHECK(r0.overlattices.size() == 1);
  auto r2 = analyze_component(2);
  CHECK(r2.overlattice_status == OverlatticeStatus::all_have_long_roots);
  CHECK(r2.overlattices.size() == 3);
}

TEST_CASE("the alternate form's own lattice has twice the discriminant") {
  for (long tau = -1; tau <= 3; ++tau) {
    auto r = analyze_component(tau);
    long order = 1;
    for (long d : r.alternate_lattice_group) order *= d;
    CHECK(order == 2 * Integer(abs(r.discriminant)).get_si());
  }
}

TEST_CASE("evenness checks") {
  auto e0 = evenness_checks(0);
  CHECK(e0.primitive_part_even);
  CHECK(e0.alternate_form_even);
  auto e3 = evenness_checks(3);
  CHECK(e3.primitive_part_even);
  CHECK(e3.alternate_form_even);
  for (long tau = -4; tau <= 6; ++tau) {
    auto e = evenness_checks(tau);
    CHECK(e.primitive_part_even);
    CHECK(e.alternate_form_even);
    CHECK(e.primitive_gram(0, 0) == 24);
    CHECK(e.primitive_gram(1, 1) == 58 - 8 * tau);
    CHECK(e.primitive_gram(0, 1) == 36 - 3 * tau);
    // 2(3x^2 - y^2 + 3z^2 + 2xy + 8xz + (4 - tau)yz)
    CHECK(e.alternate_gram == IntMatrix{{6, 2, 8}, {2, -2, 4 - tau}, {8, 4 - tau, 6}});
  }
}

TEST_CASE("determinant obstruction for a section class") {
  CHECK(rq_obstruction_det({0, 0}) == 5);
  CHECK(lattice::determinant(RQProbe{0, 0}.gram()) == -3);
  CHECK(rq_obstruction_det({1, 1}) == 5);
  CHECK(lattice::determinant(RQProbe{1, 1}.gram()) == 5);
  for (long x = 0; x < 8; ++x)
    for (long y = 0; y < 8; ++y) CHECK(rq_obstruction_det({x, y}) == 5);
  for (long x = -20; x <= 20; x += 3)
    for (long y = -20; y <= 20; y += 7)
      CHECK(lattice::determinant(RQProbe{x, y}.gram()) == 8 * y - 3 + 4 * x - 4 * x * x);
}

TEST_CASE("Clifford parity") {
  CHECK(clifford_parity(0).cls == CliffordClass::nontrivial);
  CHECK(clifford_parity(-1).cls == CliffordClass::trivial);
  CHECK(clifford_parity(0).pt_dot_q % 2 == 0);
  for (long tau = -1; tau <= 3; ++tau) CHECK(clifford_parity(tau).pt_dot_q == 2 - tau);
  CHECK_THROWS_AS(clifford_parity(4), Error);
}

TEST_CASE("tangent conic lattice") {
  auto ns = tangent_conic_ns_lattice();
  CHECK(lattice::discriminant(ns) == -8);
  CHECK(ns.norm(IntVector{1, 0}) == 2);
  CHECK(ns.norm(IntVector{1, -1}) == -4);
}

TEST_CASE("tau = 0 identification by complement discriminants") {
  auto id = compare_tau0_candidates(tau0_candidates());
  CHECK(id.ns_complement_discriminant == 4);
  REQUIRE(id.verdicts.size() == 2);
  CHECK(id.verdicts[0].complement_discriminant == 16);
  CHECK(id.verdicts[0].admissible);
  // the tau = 4 type complement is spanned by h^2 + P - T of norm 4
  CHECK(id.verdicts[1].complement_discriminant == 4);
  CHECK(id.verdicts[1].admissible);
  CHECK_THROWS_AS(identify_tau0(tau0_candidates()), Error);
  CHECK(identify_tau0({tau0_candidates()[0]}) == 0);
}
