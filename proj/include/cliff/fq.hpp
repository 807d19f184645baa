#pragma once

#include <cstdint>
#include <vector>

#include "cliff/core.hpp"

namespace cliff::fq {

/// Field element encoded as sum c_i p^i of its polynomial-basis digits.
using Element = std::uint32_t;

/// Dense polynomial over F_p, coefficients low to high.
using PolyFp = std::vector<std::uint32_t>;

/// Rabin's test.
bool is_irreducible(const PolyFp& f, std::uint32_t p);

class FqField {
 public:
  FqField(std::uint32_t p, unsigned n, PolyFp modulus);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const PolyFp& modulus() const { return modulus_; }

  PolyFp digits(Element a) const;
  Element encode(const PolyFp& digits) const;
  Element from_int(long c) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  Element frobenius(Element a) const { return pow(a, p_); }

  /// 0 for zero, otherwise +-1 by Euler's criterion. Odd characteristic only.
  int quadratic_character(Element a) const;

  /// Least encoded generator of the multiplicative group.
  Element primitive_element() const;

 private:
  std::uint32_t p_;
  unsigned n_;
  std::uint64_t q_;
  PolyFp modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i
};

/// Deterministic field: modulus is the monic irreducible of degree n with the
/// least encoding sum c_i p^i (i < n).
FqField make_field(std::uint32_t p, unsigned n);

/// Discrete-log tables for a primitive element g; elements travel as logs
/// with `zero` = q - 1 standing for 0.
struct ZechTables {
  std::uint32_t modulus = 0;  // q - 1
  std::uint32_t zero = 0;     // sentinel log of 0
  Element generator = 0;
  std::vector<std::uint32_t> log;   // indexed by encoded element
  std::vector<Element> exp;         // g^k for k < q - 1
  std::vector<std::uint32_t> zech;  // log(1 + g^k), or `zero`
};
ZechTables build_zech(const FqField& field);

}  // namespace cliff::fq
