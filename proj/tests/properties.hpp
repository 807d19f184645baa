#pragma once

// Randomized property suites, shared by the unit tests and the acceptance
// binary. Each returns how many cases ran and the first failure, if any.

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "cliff/lattice.hpp"
#include "cliff/pointcount.hpp"
#include "cliff/polyalg.hpp"
#include "oracle.hpp"

namespace props {

using namespace cliff;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return cases > 0 && failures == 0; }
};

/// pf(A)^2 = det(A) on random antisymmetric integer matrices of sizes 2, 4, 6.
inline Outcome pfaffian_squared_is_det(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  Outcome out;
  for (int k = 0; k < cases; ++k) {
    const std::size_t n = 2 + 2 * static_cast<std::size_t>(k % 3);
    polyalg::Matrix<Rational> a(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a[i][j] = entry(rng);
        a[j][i] = -a[i][j];
      }
    const Rational pf = polyalg::pfaffian(a);
    const Rational det = oracle::gaussian_determinant(a);
    ++out.cases;
    if (pf * pf != det) out.fail("size " + std::to_string(n) + ": pf^2 = " + Rational(pf * pf).get_str() + ", det = " + det.get_str());
  }
  return out;
}

/// Milgram signature of A^*/A equals the real signature mod 8 on random even
/// nondegenerate lattices of rank <= 4.
inline Outcome milgram_matches_real_signature(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-4, 4);
  Outcome out;
  while (out.cases < cases) {
    const std::size_t n = 1 + rng() % 4;
    lattice::IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long v = entry(rng);
        if (i == j) v *= 2;
        g(i, j) = v;
        g(j, i) = v;
      }
    Eigen::MatrixXd gd(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gd(i, j) = g(i, j).get_d();
    const double det = gd.determinant();
    if (std::abs(det) < 0.5 || std::abs(det) > 3000) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gd);
    int sig = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) sig += es.eigenvalues()(i) > 0 ? 1 : -1;
    const int want = ((sig % 8) + 8) % 8;
    const int got = lattice::milgram_signature(lattice::discriminant_group(lattice::GramLattice(g)));
    ++out.cases;
    if (got != want) out.fail("rank " + std::to_string(n) + ": Milgram " + std::to_string(got) + ", real " + std::to_string(want));
  }
  return out;
}

/// disc(sublattice) = [L : sub]^2 disc(L) on random finite-index sublattices.
inline Outcome discriminant_scales_by_index(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-6, 6), small(-4, 4);
  Outcome out;
  while (out.cases < cases) {
    const std::size_t n = 1 + rng() % 3;
    lattice::IntMatrix g(n, n), m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small(rng);
    std::vector<std::vector<Rational>> gr(n, std::vector<Rational>(n)), mr(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        gr[i][j] = g(i, j);
        mr[i][j] = m(i, j);
      }
    const Rational disc = oracle::gaussian_determinant(gr);
    const Rational index = oracle::gaussian_determinant(mr);
    if (disc == 0 || index == 0) continue;
    std::vector<lattice::IntVector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m.column(j));
    const lattice::Sublattice sub{lattice::GramLattice(g), cols};
    ++out.cases;
    if (Rational(lattice::discriminant(sub.induced())) != index * index * disc) out.fail("rank " + std::to_string(n));
  }
  return out;
}

/// Product of the symmetric-elimination diagonal equals det on random
/// nonsingular symmetric rational matrices.
inline Outcome symmetric_elimination_is_det(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
  Outcome out;
  while (out.cases < cases) {
    const std::size_t n = 1 + rng() % 5;
    polyalg::Matrix<Rational> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        m[i][j] = m[j][i] = v;
      }
    // elimination without pivoting needs nonzero leading minors
    bool usable = true;
    for (std::size_t k = 1; k <= n && usable; ++k)
      usable = oracle::gaussian_determinant(polyalg::leading_submatrix(m, k)) != 0;
    if (!usable) continue;
    const auto diag = polyalg::symmetric_gaussian_elimination(m);
    Rational prod = 1;
    for (const auto& x : diag) prod *= x;
    ++out.cases;
    if (prod != oracle::gaussian_determinant(m)) out.fail("size " + std::to_string(n));
  }
  return out;
}

/// phi = (t - p)(t -+ p) prod (t^2 - a_i t + p^2) with distinct |a_i| < 2p.
inline std::vector<Integer> random_weil_polynomial(std::mt19937& rng, std::uint32_t p) {
  const long P = p;
  std::vector<long> pool;
  for (long a = -2 * P + 1; a <= 2 * P - 1; ++a) pool.push_back(a);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Integer> phi{Integer(-P), Integer(1)};
  phi = oracle::multiply(phi, {Integer(rng() % 2 ? P : -P), Integer(1)});
  for (int i = 0; i < 10; ++i) phi = oracle::multiply(phi, {Integer(P * P), Integer(-pool[static_cast<std::size_t>(i)]), Integer(1)});
  return phi;
}

/// Power sums of a synthetic Weil polynomial (via companion-matrix traces)
/// fed back through the reconstruction recover the polynomial.
inline Outcome newton_roundtrip(int cases, unsigned seed) {
  std::mt19937 rng(seed);
  const std::uint32_t primes[] = {3, 5, 7};
  Outcome out;
  for (int k = 0; k < cases; ++k) {
    const std::uint32_t p = primes[k % 3];
    const auto phi = random_weil_polynomial(rng, p);
    const auto sums = oracle::companion_power_sums(phi, 11);
    ++out.cases;
    try {
      const auto cp = pointcount::charpoly_from_traces(sums, p);
      if (cp.phi != phi) out.fail("case " + std::to_string(k) + ": reconstructed polynomial differs");
    } catch (const std::exception& e) {
      out.fail("case " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

inline std::string describe(const Outcome& o) {
  std::ostringstream os;
  os << o.cases << " cases, " << o.failures << " failures";
  if (o.failures) os << " (first: " << o.first_failure << ")";
  return os.str();
}

}  // namespace props
