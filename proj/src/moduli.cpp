#include "cliff/moduli.hpp"

#include <sstream>

namespace cliff::moduli {

using lattice::discriminant;
using lattice::is_positive_definite;

ATau a_tau(long tau) {
  ATau a;
  a.tau = tau;
  a.lattice = GramLattice(IntMatrix{{3, 1, 4}, {1, 3, tau}, {4, tau, 10}}, {"h2", "P", "T"});
  return a;
}

Integer a_tau_discriminant_formula(long tau) { return Integer(-3 * tau * tau + 8 * tau + 32); }

Sublattice primitive_part(const ATau& a) {
  return Sublattice{a.lattice, {IntVector{1, -3, 0}, IntVector{0, -4, 1}}};
}

IntMatrix alternate_form_gram(const ATau& a) {
  const IntMatrix& g = a.lattice.gram();
  IntVector u = g.apply(a.h2);
  IntMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = u[i] * u[j] - g(i, j);
  return out;
}

namespace {

bool even_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!mpz_even_p(m(i, i).get_mpz_t())) return false;
  return true;
}

}  // namespace

EvennessChecks evenness_checks(long tau) {
  ATau a = a_tau(tau);
  EvennessChecks c;
  c.primitive_gram = primitive_part(a).induced().gram();
  c.alternate_gram = alternate_form_gram(a);
  c.primitive_part_even = even_diagonal(c.primitive_gram);
  c.alternate_form_even = even_diagonal(c.alternate_gram);
  return c;
}

const char* to_string(OverlatticeStatus s) {
  switch (s) {
    case OverlatticeStatus::none_exist: return "none_exist";
    case OverlatticeStatus::all_have_long_roots: return "all_have_long_roots";
    case OverlatticeStatus::some_lack_long_roots: return "some_lack_long_roots";
  }
  return "?";
}

std::vector<long> expected_group(long tau) {
  switch (tau) {
    case -1: return {3, 7};
    case 0: return {2, 16};
    case 1: return {37};
    case 2: return {2, 2, 9};
    case 3: return {29};
    default: return {};
  }
}

ComponentReport analyze_component(long tau) {
  ATau a = a_tau(tau);
  ComponentReport r;
  r.tau = tau;
  r.discriminant = discriminant(a.lattice);
  r.positive_definite = is_positive_definite(a.lattice);

  EvennessChecks even = evenness_checks(tau);
  r.primitive_part_even = even.primitive_part_even;
  r.alternate_form_even = even.alternate_form_even;

  if (r.discriminant != 0) {
    r.disc_group = lattice::discriminant_form(a.lattice, even.alternate_gram);
    r.signature_mod8 = lattice::milgram_signature(r.disc_group);
    r.alternate_lattice_group = lattice::discriminant_group(GramLattice(even.alternate_gram)).invariants();
  }

  if (r.positive_definite) {
    Sublattice prim = primitive_part(a);
    r.short_root_witnesses = lattice::short_roots(prim);
    r.long_root_witnesses = lattice::long_roots_relative(prim, a.h2);

    if (lattice::is_squarefree(r.discriminant)) {
      r.overlattice_status = OverlatticeStatus::none_exist;
    } else {
      GramLattice binary = prim.induced();
      r.overlattice_status = OverlatticeStatus::none_exist;
      bool all_rooted = true;
      for (const auto& ov : lattice::proper_overlattices(binary)) {
        OverlatticeWitness w;
        w.gram = ov.lattice.gram();
        w.index = ov.index;
        w.long_roots = lattice::long_roots(Sublattice::whole(ov.lattice));
        if (w.long_roots.empty()) all_rooted = false;
        r.overlattices.push_back(std::move(w));
      }
      if (!r.overlattices.empty())
        r.overlattice_status =
            all_rooted ? OverlatticeStatus::all_have_long_roots : OverlatticeStatus::some_lack_long_roots;
    }
  }

  r.admissible = r.positive_definite && r.short_root_witnesses.empty() && r.long_root_witnesses.empty() &&
                 r.primitive_part_even && r.alternate_form_even && r.signature_mod8 == 0;
  return r;
}

std::vector<ComponentReport> classify_components() {
  std::vector<ComponentReport> out;
  for (long tau = -2; tau <= 4; ++tau) out.push_back(analyze_component(tau));
  return out;
}

IntMatrix RQProbe::gram() const { return IntMatrix{{3, 2, x}, {2, 4, 1}, {x, 1, y}}; }

int rq_obstruction_det(const RQProbe& probe) {
  Integer d = lattice::determinant(probe.gram());
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 8);
  return static_cast<int>(r.get_si());
}

const char* to_string(CliffordClass c) { return c == CliffordClass::trivial ? "trivial" : "nontrivial"; }

CliffordParity clifford_parity(long tau) {
  if (tau < -1 || tau > 3) throw Error("clifford_parity: tau must be one of -1, 0, 1, 2, 3");
  ATau a = a_tau(tau);
  CliffordParity out;
  out.pt_dot_q = a.lattice.pair(IntVector{0, 1, 1}, a.q_class);
  out.cls = (tau % 2 != 0) ? CliffordClass::trivial : CliffordClass::nontrivial;
  return out;
}

GramLattice tangent_conic_ns_lattice() { return GramLattice(IntMatrix{{2, 2}, {2, -2}}, {"h1", "C1"}); }

std::vector<TauCandidate> tau0_candidates() {
  return {
      TauCandidate{0, GramLattice(IntMatrix{{3, 1, 4}, {1, 3, 0}, {4, 0, 10}}, {"h2", "P", "T"})},
      TauCandidate{4, GramLattice(IntMatrix{{3, 1, 4}, {1, 3, 4}, {4, 4, 12}}, {"h2", "P", "T"})},
  };
}

TauIdentification compare_tau0_candidates(const std::vector<TauCandidate>& candidates) {
  TauIdentification out;
  GramLattice ns = tangent_conic_ns_lattice();
  Sublattice ns_complement = lattice::orthogonal_complement(Sublattice{ns, {IntVector{1, 0}}});
  out.ns_complement_discriminant = abs(discriminant(ns_complement.induced()));

  for (const auto& c : candidates) {
    CandidateVerdict v;
    v.tau = c.tau;
    Sublattice k8{c.lattice, {IntVector{1, 0, 0}, IntVector{0, 1, 0}}};
    Sublattice comp = lattice::orthogonal_complement(k8);
    v.complement_basis = comp.basis;
    v.complement_discriminant = discriminant(comp.induced());
    // index e with e^2 = disc(complement) / disc(NS complement), e | 2
    Integer cd = abs(v.complement_discriminant);
    const Integer& nd = out.ns_complement_discriminant;
    v.admissible = cd == nd || cd == 4 * nd;
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

long identify_tau0(const std::vector<TauCandidate>& candidates) {
  TauIdentification id = compare_tau0_candidates(candidates);
  std::vector<long> survivors;
  std::ostringstream detail;
  for (const auto& v : id.verdicts) {
    if (v.admissible) survivors.push_back(v.tau);
    detail << " tau=" << v.tau << " complement disc " << v.complement_discriminant.get_str();
  }
  if (survivors.size() != 1) {
    throw Error("identify_tau0: " + std::to_string(survivors.size()) +
                " candidates survive the discriminant comparison (NS complement disc " +
                id.ns_complement_discriminant.get_str() + ";" + detail.str() + ")");
  }
  return survivors.front();
}

}  // namespace cliff::moduli
