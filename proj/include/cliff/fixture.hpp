#pragma once

#include <string>
#include <vector>

#include "cliff/polyalg.hpp"

namespace cliff::fixture {

using poly::MultiPoly;

/// The explicit pfaffian cubic fourfold containing the plane x = y = z = 0,
/// its quadric bundle data, the degeneration sextic and the expected
/// normalized Frobenius polynomial at p = 3.
struct Example {
  std::vector<std::vector<std::string>> matrix_text;  // upper triangle, "" below the diagonal
  std::string cubic_text, d_text, f_text, g_text, conic_text, a_text, b_text, c_text;
  std::vector<std::vector<std::string>> bundle_text;  // displayed 4x4 Gram
  std::string phi_tilde_factor_text;                  // degree-20 factor, variable t

  polyalg::PfaffianInput matrix;
  MultiPoly cubic, d, f, g, conic, a, b, c;
  polyalg::Matrix<MultiPoly> bundle;
  std::vector<Rational> phi_tilde;  // coefficients of t^0..t^22
};

const Example& example();

/// Coefficient list (low to high) of a polynomial in the single variable t.
std::vector<Rational> univariate_coefficients(const MultiPoly& f);

}  // namespace cliff::fixture
