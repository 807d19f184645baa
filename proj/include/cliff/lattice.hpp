#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliff/core.hpp"

namespace cliff::lattice {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntVector apply(const IntVector& v) const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);

/// left * m * right == diag(diagonal), with left and right unimodular and
/// the nonnegative diagonal satisfying d_1 | d_2 | ... .
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// m * transform == echelon, transform unimodular, with the nonzero columns
/// of echelon first. Columns of transform past `rank` span the integer kernel
/// of m and that span is saturated.
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
};
ColumnEchelon column_echelon(const IntMatrix& m);

/// A basis (as columns) of the Z-span of the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram, std::vector<std::string> labels = {});

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }

  Integer pair(const IntVector& a, const IntVector& b) const;
  Integer norm(const IntVector& v) const { return pair(v, v); }
  Rational pair(const RatVector& a, const RatVector& b) const;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// Sublattice given by basis vectors in ambient coordinates.
struct Sublattice {
  GramLattice ambient;
  std::vector<IntVector> basis;

  static Sublattice whole(const GramLattice& lattice);
  IntMatrix basis_matrix() const;
  GramLattice induced() const;
  std::size_t rank() const { return basis.size(); }
  IntVector to_ambient(const IntVector& coefficients) const;
};

Integer discriminant(const GramLattice& lattice);
bool is_positive_definite(const GramLattice& lattice);

/// All v in S with v.v == n, one per +-pair, in ambient coordinates with
/// the first nonzero coordinate positive, sorted. Throws if S is not
/// positive definite.
std::vector<IntVector> vectors_of_norm(const Sublattice& sub, const Integer& n);

/// Primitive norm-2 vectors.
std::vector<IntVector> short_roots(const Sublattice& sub);

/// Norm-6 vectors whose pairing with every basis vector of S is divisible by 3.
std::vector<IntVector> long_roots(const Sublattice& sub);

/// Norm-6 vectors v of S with v + h or v - h divisible by 3 in the ambient
/// lattice. For S = <h>^perp this is the root condition relative to the
/// polarization class h.
std::vector<IntVector> long_roots_relative(const Sublattice& sub, const IntVector& h);

Sublattice orthogonal_complement(const Sublattice& sub);

/// The ambient quotient by the span of the basis is torsion free.
bool is_saturated(const Sublattice& sub);

class FiniteQuadraticForm {
 public:
  using Element = std::vector<long>;

  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<long> invariants, std::vector<RatVector> generators,
                      std::vector<std::vector<Rational>> quadratic_gram);

  /// Invariant factors d_1 | d_2 | ... (all > 1).
  const std::vector<long>& invariants() const { return invariants_; }
  /// Generator lifts as rational vectors in the source lattice basis.
  const std::vector<RatVector>& generators() const { return generators_; }
  long order() const;
  std::vector<Element> elements() const;
  Element add(const Element& a, const Element& b) const;

  /// Value in [0, 2).
  Rational q(const Element& x) const;
  /// Value in [0, 1).
  Rational b(const Element& x, const Element& y) const;

  /// Prime-power cyclic factors, sorted by prime then exponent.
  std::vector<long> primary_decomposition() const;

 private:
  std::vector<long> invariants_;
  std::vector<RatVector> generators_;
  // Raw pairings x^T Q y of generator lifts, not reduced.
  std::vector<std::vector<Rational>> pairing_;
};

/// A*/A with q(x) = x^T G x mod 2. Requires an even nonsingular lattice.
FiniteQuadraticForm discriminant_group(const GramLattice& lattice);

/// A*/A of `lattice`, with q(x) = x^T Q x mod 2 for a second rational form Q
/// that is even on A and integral on A* x A. Throws if q is not well defined.
FiniteQuadraticForm discriminant_form(const GramLattice& lattice, const IntMatrix& quadratic_gram);

/// Signature mod 8 from the phase of sum exp(pi i q(x)); phase tolerance 1e-6.
int milgram_signature(const FiniteQuadraticForm& form);

struct Overlattice {
  GramLattice lattice;
  std::vector<RatVector> basis;  // in the coordinates of the source lattice
  long index = 1;
};

/// Proper finite-index even overlattices, one per isotropic subgroup.
std::vector<Overlattice> proper_overlattices(const GramLattice& lattice);

bool is_squarefree(const Integer& n);

}  // namespace cliff::lattice
