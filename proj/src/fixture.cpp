#include "cliff/fixture.hpp"

namespace cliff::fixture {

namespace {

Example build() {
  Example ex;
  ex.matrix_text = {
      {"", "y + u", "x + y + u", "u", "z", "y + u + v"},
      {"", "", "x + y + z", "x + z + u + w", "y + z + u + v + w", "x + y + z + u + v + w"},
      {"", "", "", "x + y + u + w", "x + y + u + v + w", "x + y + z + v + w"},
      {"", "", "", "", "x + u + v + w", "x + u + w"},
      {"", "", "", "", "", "z + u + w"},
      {"", "", "", "", "", ""},
  };
  ex.cubic_text =
      "(x - 4y - z)u^2 + (-x - 3y)u*v + (x - 3y)u*w + (x - 2y - z)v*w - 2y*v^2 + x*w^2"
      " + (2x^2 + x*z - 4y^2 + 2z^2)u + (x^2 - x*y - 3y^2 + y*z - z^2)v + (2x^2 + x*y + 3x*z - 3y^2 + y*z)w"
      " + x^3 + x^2*y + 2x^2*z - x*y^2 + x*z^2 - y^3 + y*z^2 - z^3";
  ex.d_text =
      "x^6 + 6x^5*y + 12x^5*z + x^4*y^2 + 22x^4*y*z + 28x^3*y^3 - 38x^3*y^2*z + 46x^3*y*z^2 + 4x^3*z^3"
      " + 24x^2*y^4 - 4x^2*y^3*z - 37x^2*y^2*z^2 - 36x^2*y*z^3 - 4x^2*z^4 + 48x*y^4*z - 24x*y^3*z^2"
      " + 34x*y^2*z^3 + 4x*y*z^4 + 20y^5*z + 20y^4*z^2 - 8y^3*z^3 - 11y^2*z^4 - 4y*z^5";
  ex.f_text =
      "x^4 + 6x^3*y + 12x^3*z + x^2*y^2 + 21x^2*y*z - 25x^2*z^2 + 28x*y^3"
      " - 24x*y^2*z + 34x*y*z^2 + 4x*z^3 + 20y^4 - 5y^3*z - 8y^2*z^2 - 11y*z^3 - 4z^4";
  ex.g_text = "2x*y^2 + 5y^2*z - 5x^2*z";
  ex.conic_text = "x^2 + y*z";
  ex.a_text = "x - 4y - z";
  ex.b_text = "x^2 + 14x*y - 23y^2 - 8y*z";
  ex.c_text = "3x^3 + 2x^2*y - 4x^2*z + 8x*y*z + 3x*z^2 - 16y^3 - 11y^2*z - 8y*z^2 - z^3";
  ex.bundle_text = {
      {"2(x - 4y - z)", "-x - 3y", "x - 3y", "2x^2 + x*z - 4y^2 + 2z^2"},
      {"-x - 3y", "2(-2y)", "x - 2y - z", "x^2 - x*y - 3y^2 + y*z - z^2"},
      {"x - 3y", "x - 2y - z", "2x", "2x^2 + x*y + 3x*z - 3y^2 + y*z"},
      {"2x^2 + x*z - 4y^2 + 2z^2", "x^2 - x*y - 3y^2 + y*z - z^2", "2x^2 + x*y + 3x*z - 3y^2 + y*z",
       "2(x^3 + x^2*y + 2x^2*z - x*y^2 + x*z^2 - y^3 + y*z^2 - z^3)"},
  };
  ex.phi_tilde_factor_text =
      "3t^20 + t^19 + t^17 + t^16 + 2t^15 + 3t^14 + t^12 + 3t^11"
      " + 2t^10 + 3t^9 + t^8 + 3t^6 + 2t^5 + t^4 + t^3 + t + 3";

  ex.matrix.size = 6;
  ex.matrix.upper.assign(6, std::vector<MultiPoly>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) ex.matrix.upper[i][j] = poly::parse(ex.matrix_text[i][j]);
  ex.cubic = poly::parse(ex.cubic_text);
  ex.d = poly::parse(ex.d_text);
  ex.f = poly::parse(ex.f_text);
  ex.g = poly::parse(ex.g_text);
  ex.conic = poly::parse(ex.conic_text);
  ex.a = poly::parse(ex.a_text);
  ex.b = poly::parse(ex.b_text);
  ex.c = poly::parse(ex.c_text);
  ex.bundle.assign(4, std::vector<MultiPoly>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) ex.bundle[i][j] = poly::parse(ex.bundle_text[i][j]);

  MultiPoly t = MultiPoly::variable(poly::Var::T);
  MultiPoly phi = (t - MultiPoly(1)).pow(2) * poly::parse(ex.phi_tilde_factor_text);
  phi *= Rational(1, 3);
  ex.phi_tilde = univariate_coefficients(phi);
  return ex;
}

}  // namespace

const Example& example() {
  static const Example ex = build();
  return ex;
}

std::vector<Rational> univariate_coefficients(const MultiPoly& f) {
  for (std::size_t v = 0; v < poly::kVars; ++v)
    if (static_cast<int>(v) != poly::Var::T && f.uses(static_cast<int>(v)))
      throw Error("univariate_coefficients: polynomial involves a variable other than t");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(f.degree_in(poly::Var::T), 0)) + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) out[e[poly::Var::T]] = c;
  return out;
}

}  // namespace cliff::fixture
