#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliff/fq.hpp"
#include "cliff/poly.hpp"

namespace cliff::pointcount {

using poly::MultiPoly;

/// Coefficients of a ternary sextic reduced mod p; coeff[i][j] is the
/// coefficient of x^(6-i-j) y^i z^j.
struct SexticModP {
  std::uint32_t p = 0;
  std::uint32_t coeff[7][7] = {};
};
SexticModP reduce_sextic(const MultiPoly& d, std::uint32_t p);

/// sum over P in P^2(F_q) of 1 + chi(d(P)), chi(0) = 0.
/// Serial reference: polynomial-basis arithmetic and a table of squares.
std::uint64_t count_points_reference(const MultiPoly& d, const fq::FqField& field);

/// Same count with Zech-logarithm arithmetic, one evaluation per Frobenius
/// orbit of y on the chart x = 1, and an OpenMP loop over orbit
/// representatives. threads <= 0 keeps the OpenMP default.
std::uint64_t count_points_double_cover(const MultiPoly& d, const fq::FqField& field, int threads = 0);
std::uint64_t count_points_double_cover(const MultiPoly& d, const fq::FqField& field, const fq::ZechTables& zech,
                                        int threads = 0);

/// Counts over F_{p^n} for n = 1..max_n.
std::vector<std::uint64_t> count_series(const MultiPoly& d, std::uint32_t p, unsigned max_n, int threads = 0);

/// t_n = #S(F_{p^n}) - 1 - p^(2n).
std::vector<Integer> traces_from_counts(const std::vector<std::uint64_t>& counts, std::uint32_t p);

/// Newton's identities: e_0..e_k from the power sums s_1..s_k.
std::vector<Rational> elementary_from_power_sums(const std::vector<Integer>& power_sums);

struct CharpolyCandidate {
  int epsilon = 1;
  bool integral = false;
  bool middle_consistent = false;
  bool root_at_p = false;
  double max_modulus_deviation = 0;  // max | |root of phi~| - 1 |
  bool accepted = false;
  std::vector<Rational> coefficients;  // c_0..c_22 of phi
};

struct Charpoly {
  std::uint32_t p = 0;
  int epsilon = 1;
  std::vector<Integer> phi;          // c_0..c_22, monic
  std::vector<Rational> phi_tilde;   // p^-22 phi(p t)
  std::vector<CharpolyCandidate> candidates;
};

/// Newton's identities plus the functional equation
/// e_(22-k) = eps p^(22-2k) e_k, both signs tried. A candidate survives if its
/// coefficients are integers, phi(p) = 0 (the hyperplane class), and every
/// root of phi~ lies on the unit circle within `tolerance`.
/// Requires exactly 11 traces; throws unless exactly one candidate survives.
Charpoly charpoly_from_traces(const std::vector<Integer>& traces, std::uint32_t p, double tolerance = 1e-6);

/// What fewer than 11 traces pin down.
struct PartialCharpoly {
  std::uint32_t p = 0;
  std::vector<Rational> known;     // e_0..e_N
  std::vector<int> unknown;        // k with e_k free for both signs
  std::vector<std::string> relations;  // e_(22-k) = eps p^(22-2k) e_k
};
PartialCharpoly partial_charpoly(const std::vector<Integer>& traces, std::uint32_t p);

std::vector<Rational> normalize_charpoly(const std::vector<Integer>& phi, std::uint32_t p);

/// Integer coefficients (low to high) of the k-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(unsigned k);

/// Number of roots (with multiplicity) that are roots of unity.
int cyclotomic_root_count(const std::vector<Rational>& poly);

int picard_bound(const Charpoly& charpoly);

}  // namespace cliff::pointcount
