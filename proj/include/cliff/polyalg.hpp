#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliff/poly.hpp"

namespace cliff::polyalg {

using poly::MultiPoly;
using poly::RatFunc;

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Prime field element for compile-time P < 2^31.
template <std::uint32_t P>
struct ModP {
  std::uint32_t v = 0;
  ModP() = default;
  ModP(long x) {  // NOLINT
    long r = x % static_cast<long>(P);
    v = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(P) : r);
  }
  friend ModP operator+(ModP a, ModP b) { return raw((a.v + b.v) % P); }
  friend ModP operator-(ModP a, ModP b) { return raw((a.v + P - b.v) % P); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw((P - v) % P); }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
  ModP inverse() const {
    if (v == 0) throw Error("ModP: inverse of zero");
    ModP r(1), b = *this;
    for (std::uint32_t e = P - 2; e > 0; e >>= 1U) {
      if (e & 1U) r = r * b;
      b = b * b;
    }
    return r;
  }

 private:
  static ModP raw(std::uint32_t x) {
    ModP m;
    m.v = x;
    return m;
  }
};

inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_zero(const MultiPoly& a) { return a.is_zero(); }
inline bool is_zero(const RatFunc& a) { return a.is_zero(); }
template <std::uint32_t P>
bool is_zero(const ModP<P>& a) {
  return a.v == 0;
}

namespace detail {

template <class T>
T pfaffian_rec(const Matrix<T>& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  T sum(0);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const T& entry = m[idx[0]][idx[j]];
    if (is_zero(entry)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    T term = entry * pfaffian_rec(m, rest);
    if (j % 2 == 1)
      sum = sum + term;
    else
      sum = sum - term;
  }
  return sum;
}

template <class T>
T determinant_rec(const Matrix<T>& m, std::size_t row, const std::vector<std::size_t>& cols) {
  if (cols.empty()) return T(1);
  T sum(0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const T& entry = m[row][cols[j]];
    if (is_zero(entry)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) rest.push_back(cols[k]);
    T term = entry * determinant_rec(m, row + 1, rest);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace detail

/// Pfaffian by expansion along the first row; only entries above the
/// diagonal are read.
template <class T>
T pfaffian(const Matrix<T>& m) {
  if (m.size() % 2 != 0) throw Error("pfaffian: matrix size is odd");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m, idx);
}

/// Cofactor expansion; meant for sizes up to about 8.
template <class T>
T determinant(const Matrix<T>& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::determinant_rec(m, 0, cols);
}

template <class T>
Matrix<T> leading_submatrix(const Matrix<T>& m, std::size_t k) {
  Matrix<T> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].assign(m[i].begin(), m[i].begin() + static_cast<long>(k));
  return out;
}

/// Diagonal (m1, m2/m1, ..., mn/m(n-1)) obtained by symmetric elimination;
/// throws naming the first leading minor that vanishes before the last step.
template <class T>
std::vector<T> symmetric_gaussian_elimination(Matrix<T> m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("symmetric_gaussian_elimination: matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (!(m[i][j] == m[j][i])) throw Error("symmetric_gaussian_elimination: matrix is not symmetric");
  }
  std::vector<T> diag;
  for (std::size_t k = 0; k < n; ++k) {
    T pivot = m[k][k];
    diag.push_back(pivot);
    if (k + 1 == n) break;
    if (is_zero(pivot))
      throw Error("symmetric_gaussian_elimination: leading minor m" + std::to_string(k + 1) + " vanishes");
    for (std::size_t i = k + 1; i < n; ++i) {
      T factor = m[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] - factor * m[k][j];
    }
  }
  return diag;
}

/// Upper triangle of an antisymmetric matrix; entry (i, j) for i < j.
struct PfaffianInput {
  std::size_t size = 0;
  Matrix<MultiPoly> upper;
  Matrix<MultiPoly> full() const;
};
MultiPoly pfaffian(const PfaffianInput& input);

/// Every term has positive degree in the plane variables.
bool contains_plane(const MultiPoly& f, const std::vector<int>& plane_vars);

enum class Smoothness { certified_smooth, singular_mod_p, inconclusive };
const char* to_string(Smoothness s);

struct SmoothnessReport {
  Smoothness status = Smoothness::inconclusive;
  std::uint32_t prime = 0;
  std::size_t basis_size = 0;
  int max_degree = 0;
};

/// Jacobian criterion mod p on the hypersurface f = 0 in the projective space
/// with coordinates `ambient`: Groebner basis of (f, df/dv for v in ambient).
/// Throws if p kills a partial derivative that is nonzero over Q.
SmoothnessReport is_smooth_hypersurface(const MultiPoly& f, std::uint32_t p, const std::vector<int>& ambient,
                                        int max_degree = 14);

/// First odd prime below `bound` certifying smoothness; primes where the
/// criterion is not applicable are skipped.
SmoothnessReport certify_smooth(const MultiPoly& f, const std::vector<int>& ambient, std::uint32_t bound = 100,
                                int max_degree = 14);

/// Gram over (u, v, w, s) of 2F written as a quadratic form in the fiber
/// variables with coefficients in the plane variables.
struct QuadricBundle {
  Matrix<MultiPoly> gram;
};
QuadricBundle extract_quadric_bundle(const MultiPoly& f, const std::vector<int>& plane_vars,
                                     const std::vector<int>& fiber_vars);

struct DiscriminantSextic {
  MultiPoly determinant;
  MultiPoly normalized;  // primitive, positive leading coefficient
  Rational scale;        // determinant = scale * normalized
};
DiscriminantSextic discriminant_sextic(const QuadricBundle& qb);

/// c with a = c * b when b divides a with constant quotient.
std::optional<Rational> proportionality_constant(const MultiPoly& a, const MultiPoly& b);

bool verify_tangency(const MultiPoly& d, const MultiPoly& conic, const MultiPoly& f, const MultiPoly& g);

struct TangencyPoints {
  int total_degree = 0;
  int distinct_count = 0;
  MultiPoly restriction;  // binary form in s, t
};
/// Restricts g to x^2 + yz = 0 via (s:t) -> (st, s^2, -t^2).
TangencyPoints tangency_points(const MultiPoly& conic, const MultiPoly& g);

struct QuaternionSymbol {
  MultiPoly first;
  MultiPoly second;
};

struct CliffordSymbol {
  std::vector<MultiPoly> minors;  // m1..m4
  QuaternionSymbol symbol;        // (-m2, -m1 m3) reduced modulo squares
};
CliffordSymbol clifford_quaternion_symbol(const QuadricBundle& qb);
CliffordSymbol clifford_quaternion_symbol(const Matrix<MultiPoly>& gram);

bool same_square_class(const MultiPoly& a, const MultiPoly& b);

/// d mod p and its partials have a common projective zero.
bool plane_curve_singular_mod_p(const MultiPoly& d, std::uint32_t p);

struct BadPrimeScan {
  std::vector<std::uint32_t> bad;
  // primes where d vanishes mod p or every partial does (the Jacobian
  // criterion says nothing there)
  std::vector<std::uint32_t> skipped;
};
BadPrimeScan bad_primes_scan(const MultiPoly& d, std::uint32_t bound);

}  // namespace cliff::polyalg
