#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliff/core.hpp"

namespace cliff::poly {

/// Fixed variable universe; the order is also the grevlex variable order.
constexpr std::size_t kVars = 8;
enum Var : int { X = 0, Y, Z, U, V, W, S, T };
inline constexpr std::array<const char*, kVars> kVarNames{"x", "y", "z", "u", "v", "w", "s", "t"};

using Exponent = std::array<std::uint16_t, kVars>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);  // a | b
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);
Exponent exponent_add(const Exponent& a, const Exponent& b);

/// Strict "a comes before b" in descending graded reverse lexicographic order.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrevlexGreater>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: constants convert implicitly
  MultiPoly(const Rational& c);
  MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(int var);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;  // -1 for zero
  bool is_homogeneous() const;
  bool uses(int var) const { return degree_in(var) > 0; }

  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Exponent& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(int var) const;
  MultiPoly substitute(const std::array<MultiPoly, kVars>& images) const;
  Rational evaluate(const std::array<Rational, kVars>& point) const;

  /// Coefficients with respect to `var`: result[k] is the coefficient of var^k.
  std::vector<MultiPoly> coefficients_in(int var) const;

  /// Positive gcd of the coefficients (numerators' gcd over denominators' lcm).
  Rational content() const;
  /// Divides by the content and makes the leading coefficient positive.
  MultiPoly primitive() const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Integers, the variables x y z u v w s t, + - * / ^ and parentheses;
/// juxtaposition multiplies. Division only by nonzero constants.
MultiPoly parse(const std::string& text);

/// Quotient if b divides a exactly over Q.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor, primitive with positive leading coefficient.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// f = unit * prod factor_i^multiplicity_i with squarefree, pairwise coprime,
/// primitive factors of positive leading coefficient.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<std::pair<MultiPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f);

/// Product of the distinct irreducible factors (up to a constant).
MultiPoly squarefree_part(const MultiPoly& f);

/// Representative of f modulo squares of nonzero rational functions:
/// squarefree integer times the product of odd-multiplicity factors.
MultiPoly reduce_mod_squares(const MultiPoly& f);

/// Coefficients reduced into [0, p); throws if p divides a denominator.
std::vector<std::pair<Exponent, std::uint64_t>> reduce_mod(const MultiPoly& f, std::uint64_t p);

/// Element of Q(x, y, ...), kept in lowest terms with a monic-leading denominator.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const MultiPoly& n);  // NOLINT
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}  // NOLINT
  RatFunc(const MultiPoly& n, const MultiPoly& d);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace cliff::poly
