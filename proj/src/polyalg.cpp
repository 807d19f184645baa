#include "cliff/polyalg.hpp"

#include <algorithm>

#include "cliff/groebner.hpp"

namespace cliff::polyalg {

using poly::Exponent;

Matrix<MultiPoly> PfaffianInput::full() const {
  if (upper.size() != size) throw Error("pfaffian input: wrong number of rows");
  Matrix<MultiPoly> m(size, std::vector<MultiPoly>(size));
  for (std::size_t i = 0; i < size; ++i) {
    if (upper[i].size() != size) throw Error("pfaffian input: wrong number of columns");
    for (std::size_t j = i + 1; j < size; ++j) {
      m[i][j] = upper[i][j];
      m[j][i] = -upper[i][j];
    }
  }
  return m;
}

MultiPoly pfaffian(const PfaffianInput& input) { return pfaffian(input.full()); }

bool contains_plane(const MultiPoly& f, const std::vector<int>& plane_vars) {
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (int v : plane_vars) deg += e[v];
    if (deg == 0) return false;
  }
  return true;
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::certified_smooth: return "certified_smooth";
    case Smoothness::singular_mod_p: return "singular_mod_p";
    case Smoothness::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void require_variables(const MultiPoly& f, const std::vector<int>& allowed, const char* who) {
  for (std::size_t v = 0; v < poly::kVars; ++v)
    if (f.uses(static_cast<int>(v)) && std::find(allowed.begin(), allowed.end(), static_cast<int>(v)) == allowed.end())
      throw Error(std::string(who) + ": polynomial uses a variable outside the ambient space");
}

}  // namespace

SmoothnessReport is_smooth_hypersurface(const MultiPoly& f, std::uint32_t p, const std::vector<int>& ambient,
                                        int max_degree) {
  if (!is_prime(p)) throw Error("is_smooth_hypersurface: p is not prime");
  if (!f.is_homogeneous() || f.is_zero()) throw Error("is_smooth_hypersurface: f must be a nonzero form");
  require_variables(f, ambient, "is_smooth_hypersurface");
  std::vector<groebner::ModPoly> gens;
  gens.push_back(groebner::to_mod(f, p));
  if (gens.back().is_zero()) throw Error("is_smooth_hypersurface: f vanishes mod p");
  for (int v : ambient) {
    MultiPoly partial = f.derivative(v);
    if (partial.is_zero()) continue;
    groebner::ModPoly reduced = groebner::to_mod(partial, p);
    if (reduced.is_zero())
      throw Error("is_smooth_hypersurface: p = " + std::to_string(p) + " kills the partial in " +
                  poly::kVarNames[v]);
    gens.push_back(std::move(reduced));
  }
  groebner::Options opt;
  opt.max_degree = max_degree;
  groebner::Result res = groebner::buchberger(gens, p, ambient, opt);
  SmoothnessReport out;
  out.prime = p;
  out.basis_size = res.basis.size();
  out.max_degree = res.max_degree_reached;
  if (res.zero_dimensional) {
    out.status = Smoothness::certified_smooth;
  } else if (res.complete) {
    out.status = Smoothness::singular_mod_p;
  } else {
    out.status = Smoothness::inconclusive;
  }
  return out;
}

SmoothnessReport certify_smooth(const MultiPoly& f, const std::vector<int>& ambient, std::uint32_t bound,
                                int max_degree) {
  SmoothnessReport last;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (p == 2) continue;
    try {
      SmoothnessReport r = is_smooth_hypersurface(f, static_cast<std::uint32_t>(p), ambient, max_degree);
      if (r.status == Smoothness::certified_smooth) return r;
      last = r;
    } catch (const Error&) {
      continue;
    }
  }
  last.status = Smoothness::inconclusive;
  return last;
}

QuadricBundle extract_quadric_bundle(const MultiPoly& f, const std::vector<int>& plane_vars,
                                     const std::vector<int>& fiber_vars) {
  if (fiber_vars.size() != 3) throw Error("extract_quadric_bundle: expected three fiber variables");
  if (!contains_plane(f, plane_vars)) throw Error("extract_quadric_bundle: F does not contain the plane");
  std::vector<int> all = plane_vars;
  all.insert(all.end(), fiber_vars.begin(), fiber_vars.end());
  require_variables(f, all, "extract_quadric_bundle");

  QuadricBundle qb;
  qb.gram.assign(4, std::vector<MultiPoly>(4));
  for (const auto& [e, c] : f.terms()) {
    Exponent base = e;
    std::vector<std::size_t> fiber;  // fiber slots with multiplicity
    for (std::size_t k = 0; k < 3; ++k) {
      for (int r = 0; r < e[fiber_vars[k]]; ++r) fiber.push_back(k);
      base[fiber_vars[k]] = 0;
    }
    if (fiber.size() > 2) throw Error("extract_quadric_bundle: degree in the fiber variables exceeds 2");
    MultiPoly coeff = MultiPoly::monomial(base, c);
    const std::size_t i = fiber.size() >= 1 ? fiber[0] : 3;
    const std::size_t j = fiber.size() == 2 ? fiber[1] : 3;
    if (i == j) {
      qb.gram[i][i] += coeff * MultiPoly(2);
    } else {
      qb.gram[i][j] += coeff;
      qb.gram[j][i] += coeff;
    }
  }
  return qb;
}

DiscriminantSextic discriminant_sextic(const QuadricBundle& qb) {
  DiscriminantSextic out;
  out.determinant = determinant(qb.gram);
  if (out.determinant.is_zero()) throw Error("discriminant_sextic: degenerate bundle (determinant vanishes)");
  out.normalized = out.determinant.primitive();
  out.scale = out.determinant.leading_coefficient() / out.normalized.leading_coefficient();
  return out;
}

std::optional<Rational> proportionality_constant(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  auto q = poly::divide_exact(a, b);
  if (!q || !q->is_constant()) return std::nullopt;
  return q->constant_value();
}

bool verify_tangency(const MultiPoly& d, const MultiPoly& conic, const MultiPoly& f, const MultiPoly& g) {
  return (d - conic * f - g * g).is_zero();
}

TangencyPoints tangency_points(const MultiPoly& conic, const MultiPoly& g) {
  using poly::Var;
  std::array<MultiPoly, poly::kVars> images;
  for (std::size_t v = 0; v < poly::kVars; ++v) images[v] = MultiPoly::variable(static_cast<int>(v));
  const MultiPoly s = MultiPoly::variable(Var::S);
  const MultiPoly t = MultiPoly::variable(Var::T);
  images[Var::X] = s * t;
  images[Var::Y] = s * s;
  images[Var::Z] = -(t * t);
  require_variables(conic, {Var::X, Var::Y, Var::Z}, "tangency_points");
  require_variables(g, {Var::X, Var::Y, Var::Z}, "tangency_points");
  if (!conic.substitute(images).is_zero())
    throw Error("tangency_points: the parametrization (st, s^2, -t^2) does not lie on the conic");
  TangencyPoints out;
  out.restriction = g.substitute(images);
  if (out.restriction.is_zero()) throw Error("tangency_points: the conic lies in {g = 0}");
  out.total_degree = out.restriction.total_degree();
  out.distinct_count = poly::squarefree_part(out.restriction).total_degree();
  return out;
}

CliffordSymbol clifford_quaternion_symbol(const Matrix<MultiPoly>& gram) {
  if (gram.size() != 4) throw Error("clifford_quaternion_symbol: expected a 4x4 Gram matrix");
  CliffordSymbol out;
  for (std::size_t k = 1; k <= 4; ++k) out.minors.push_back(determinant(leading_submatrix(gram, k)));
  for (std::size_t k = 0; k < 3; ++k)
    if (out.minors[k].is_zero())
      throw Error("clifford_quaternion_symbol: leading minor m" + std::to_string(k + 1) + " vanishes");
  out.symbol.first = poly::reduce_mod_squares(-out.minors[1]);
  out.symbol.second = poly::reduce_mod_squares(-(out.minors[0] * out.minors[2]));
  return out;
}

CliffordSymbol clifford_quaternion_symbol(const QuadricBundle& qb) { return clifford_quaternion_symbol(qb.gram); }

bool same_square_class(const MultiPoly& a, const MultiPoly& b) {
  return poly::reduce_mod_squares(a) == poly::reduce_mod_squares(b);
}

bool plane_curve_singular_mod_p(const MultiPoly& d, std::uint32_t p) {
  using poly::Var;
  if (p == 2 || !is_prime(p)) throw Error("plane_curve_singular_mod_p: p must be an odd prime");
  const std::vector<int> plane{Var::X, Var::Y, Var::Z};
  require_variables(d, plane, "plane_curve_singular_mod_p");
  std::vector<groebner::ModPoly> gens{groebner::to_mod(d, p)};
  if (gens[0].is_zero()) throw Error("plane_curve_singular_mod_p: d vanishes mod p");
  for (int v : plane) gens.push_back(groebner::to_mod(d.derivative(v), p));
  groebner::Options opt;
  opt.max_degree = 200;
  groebner::Result res = groebner::buchberger(gens, p, plane, opt);
  if (res.zero_dimensional) return false;
  if (!res.complete) throw Error("plane_curve_singular_mod_p: Groebner computation exceeded the degree bound");
  return true;
}

BadPrimeScan bad_primes_scan(const MultiPoly& d, std::uint32_t bound) {
  BadPrimeScan out;
  for (std::uint64_t p64 : primes_up_to(bound)) {
    if (p64 == 2) continue;
    auto p = static_cast<std::uint32_t>(p64);
    if (groebner::to_mod(d, p).is_zero()) {
      out.skipped.push_back(p);
      continue;
    }
    bool all_partials_vanish = true;
    for (int v : {poly::Var::X, poly::Var::Y, poly::Var::Z})
      if (!groebner::to_mod(d.derivative(v), p).is_zero()) all_partials_vanish = false;
    if (all_partials_vanish) {
      out.skipped.push_back(p);
      continue;
    }
    if (plane_curve_singular_mod_p(d, p)) out.bad.push_back(p);
  }
  return out;
}

}  // namespace cliff::polyalg
