#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cliff/poly.hpp"

namespace cliff::groebner {

using poly::Exponent;

/// Polynomial over F_p; terms sorted in descending grevlex order, nonzero.
struct ModPoly {
  std::vector<std::pair<Exponent, std::uint32_t>> terms;
  bool is_zero() const { return terms.empty(); }
  const Exponent& leading() const { return terms.front().first; }
};

/// Reduction of a rational polynomial modulo p (terms that vanish are dropped).
ModPoly to_mod(const poly::MultiPoly& f, std::uint32_t p);

struct Options {
  int max_degree = 60;
  // Stop as soon as every active variable has a pure power among leading
  // monomials; the ideal then has no projective zero.
  bool stop_when_zero_dimensional = true;
};

struct Result {
  std::vector<ModPoly> basis;
  bool complete = false;           // every pair treated; basis is a Groebner basis
  bool zero_dimensional = false;   // pure power of every active variable found
  std::vector<int> pure_power;     // per active variable, degree of the pure power or -1
  int max_degree_reached = 0;
  std::size_t reductions = 0;
};

/// Homogeneous Buchberger over F_p in grevlex with the product and chain
/// criteria, degree-by-degree (normal selection). All inputs must be
/// homogeneous in the variables listed in `active`; other variables must not occur.
Result buchberger(const std::vector<ModPoly>& generators, std::uint32_t p, const std::vector<int>& active,
                  const Options& options = {});

}  // namespace cliff::groebner
