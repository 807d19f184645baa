#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliff/lattice.hpp"

namespace cliff::moduli {

using lattice::FiniteQuadraticForm;
using lattice::GramLattice;
using lattice::IntMatrix;
using lattice::IntVector;
using lattice::Sublattice;

/// Rank-3 lattice <h^2, P, T> with Gram [[3,1,4],[1,3,tau],[4,tau,10]].
struct ATau {
  long tau = 0;
  GramLattice lattice;
  IntVector h2{1, 0, 0};
  IntVector q_class{1, -1, 0};  // Q = h^2 - P
};

ATau a_tau(long tau);

/// -3 tau^2 + 8 tau + 32.
Integer a_tau_discriminant_formula(long tau);

/// <h^2>^perp inside A_tau, on the basis (1,-3,0), (0,-4,1).
Sublattice primitive_part(const ATau& a);

/// Gram of w -> (h^2, w)^2 - (w, w) on A_tau.
IntMatrix alternate_form_gram(const ATau& a);

struct EvennessChecks {
  bool primitive_part_even = false;  // form on <h^2>^perp
  bool alternate_form_even = false;  // (h^2,w)^2 - (w,w)
  IntMatrix primitive_gram;
  IntMatrix alternate_gram;
};
EvennessChecks evenness_checks(long tau);

enum class OverlatticeStatus { none_exist, all_have_long_roots, some_lack_long_roots };
const char* to_string(OverlatticeStatus s);

struct OverlatticeWitness {
  IntMatrix gram;
  long index = 1;
  std::vector<IntVector> long_roots;  // in overlattice coordinates
};

struct ComponentReport {
  long tau = 0;
  Integer discriminant;
  bool positive_definite = false;
  std::vector<IntVector> short_root_witnesses;
  std::vector<IntVector> long_root_witnesses;
  bool primitive_part_even = false;
  bool alternate_form_even = false;
  // q_{K_tau}: the alternate form restricted to A_tau^* / A_tau
  FiniteQuadraticForm disc_group;
  int signature_mod8 = 0;
  // A^*/A of the alternate form's own Gram matrix, for comparison
  std::vector<long> alternate_lattice_group;
  OverlatticeStatus overlattice_status = OverlatticeStatus::none_exist;
  std::vector<OverlatticeWitness> overlattices;
  bool admissible = false;
};

/// Scans the positivity window tau in {-2..4}.
std::vector<ComponentReport> classify_components();
ComponentReport analyze_component(long tau);

/// Expected group invariants (prime-power factors) for admissible tau.
std::vector<long> expected_group(long tau);

struct RQProbe {
  long x = 0;
  long y = 0;
  IntMatrix gram() const;
};

/// det of [[3,2,x],[2,4,1],[x,1,y]] reduced into [0, 8).
int rq_obstruction_det(const RQProbe& probe);

enum class CliffordClass { trivial, nontrivial };
const char* to_string(CliffordClass c);

struct CliffordParity {
  CliffordClass cls = CliffordClass::trivial;
  Integer pt_dot_q;  // (P + T).Q computed from the Gram matrix
};
CliffordParity clifford_parity(long tau);

/// Gram [[2,2],[2,-2]] on (h1, C1).
GramLattice tangent_conic_ns_lattice();

struct TauCandidate {
  long tau = 0;
  GramLattice lattice;
};

/// The two discriminant-32 Gram matrices with P.T in {0, 4}.
std::vector<TauCandidate> tau0_candidates();

struct CandidateVerdict {
  long tau = 0;
  Integer complement_discriminant;
  std::vector<IntVector> complement_basis;
  bool admissible = false;
};

struct TauIdentification {
  std::vector<CandidateVerdict> verdicts;
  Integer ns_complement_discriminant;  // |disc(<h1>^perp)| in NS
};

/// Compares disc(<h^2,P>^perp) with |disc(<h1>^perp in NS)| under an
/// inclusion of index dividing 2.
TauIdentification compare_tau0_candidates(const std::vector<TauCandidate>& candidates);

/// Unique surviving tau; throws if zero or several candidates survive.
long identify_tau0(const std::vector<TauCandidate>& candidates);

}  // namespace cliff::moduli
