#include "cliff/pointcount.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace cliff::pointcount {

SexticModP reduce_sextic(const MultiPoly& d, std::uint32_t p) {
  if (p == 2) throw Error("point count: characteristic 2 is not supported");
  if (d.is_zero() || d.total_degree() != 6 || !d.is_homogeneous())
    throw Error("point count: d must be a ternary sextic form");
  for (int v = poly::Var::U; v < static_cast<int>(poly::kVars); ++v)
    if (d.uses(v)) throw Error("point count: d may only involve x, y, z");
  SexticModP out;
  out.p = p;
  bool any = false;
  for (const auto& [e, c] : poly::reduce_mod(d, p)) {
    out.coeff[e[poly::Var::Y]][e[poly::Var::Z]] = static_cast<std::uint32_t>(c);
    any = true;
  }
  if (!any) throw Error("point count: d vanishes mod p");
  return out;
}

std::uint64_t count_points_reference(const MultiPoly& d, const fq::FqField& field) {
  const SexticModP s = reduce_sextic(d, field.p());
  const auto q = static_cast<fq::Element>(field.q());
  std::vector<signed char> chi(q, -1);
  chi[0] = 0;
  for (fq::Element a = 1; a < q; ++a) chi[field.mul(a, a)] = 1;

  // d(1, y, z) = sum_j z^j C_j(y) with C_j(y) = sum_i coeff[i][j] y^i
  std::int64_t total = 0;
  for (fq::Element y = 0; y < q; ++y) {
    fq::Element c[7];
    for (int j = 0; j <= 6; ++j) {
      fq::Element acc = 0;
      for (int i = 6 - j; i >= 0; --i) acc = field.add(field.mul(acc, y), s.coeff[i][j]);
      c[j] = acc;
    }
    for (fq::Element z = 0; z < q; ++z) {
      fq::Element acc = c[6];
      for (int j = 5; j >= 0; --j) acc = field.add(field.mul(acc, z), c[j]);
      total += chi[acc];
    }
  }
  // d(0, 1, z) = sum_j coeff[6 - j][j] z^j
  for (fq::Element z = 0; z < q; ++z) {
    fq::Element acc = 0;
    for (int j = 6; j >= 0; --j) acc = field.add(field.mul(acc, z), s.coeff[6 - j][j]);
    total += chi[acc];
  }
  total += chi[s.coeff[0][6]];
  const std::uint64_t points = static_cast<std::uint64_t>(q) * q + q + 1;
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(points) + total);
}

namespace {

// Arithmetic on discrete logs; `zero` stands for the field's 0.
struct LogArith {
  const std::uint32_t* zech;
  std::uint32_t m;
  std::uint32_t zero;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == zero || b == zero) return zero;
    std::uint32_t s = a + b;
    return s >= m ? s - m : s;
  }
  // g^a + g^b = g^a (1 + g^(b - a))
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == zero) return b;
    if (b == zero) return a;
    std::uint32_t diff = b >= a ? b - a : b + m - a;
    std::uint32_t z = zech[diff];
    if (z == zero) return zero;
    std::uint32_t s = a + z;
    return s >= m ? s - m : s;
  }
  int chi(std::uint32_t a) const {
    if (a == zero) return 0;
    return (a & 1U) ? -1 : 1;
  }
};

}  // namespace

std::uint64_t count_points_double_cover(const MultiPoly& d, const fq::FqField& field, int threads) {
  return count_points_double_cover(d, field, fq::build_zech(field), threads);
}

std::uint64_t count_points_double_cover(const MultiPoly& d, const fq::FqField& field, const fq::ZechTables& zech,
                                        int threads) {
  const SexticModP s = reduce_sextic(d, field.p());
  const LogArith L{zech.zech.data(), zech.modulus, zech.zero};
  const std::uint32_t m = zech.modulus;
  const std::uint32_t p = field.p();

  std::uint32_t clog[7][7];
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) clog[i][j] = zech.log[s.coeff[i][j]];

  // sum over z of chi(d(1, y, z)) for y = g^ly (or y = 0)
  auto row_sum = [&](std::uint32_t ly) -> std::int64_t {
    std::uint32_t c[7];
    for (int j = 0; j <= 6; ++j) {
      std::uint32_t acc = zech.zero;
      for (int i = 6 - j; i >= 0; --i) acc = L.add(L.mul(acc, ly), clog[i][j]);
      c[j] = acc;
    }
    std::int64_t sum = L.chi(c[0]);
    for (std::uint32_t lz = 0; lz < m; ++lz) {
      std::uint32_t acc = c[6];
      for (int j = 5; j >= 0; --j) acc = L.add(L.mul(acc, lz), c[j]);
      sum += L.chi(acc);
    }
    return sum;
  };

  // y and y^p give the same row sum (z -> z^p permutes the row, d has
  // coefficients in F_p), so walk orbits of ly -> p ly mod (q - 1).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;
  {
    std::vector<bool> seen(m, false);
    for (std::uint32_t ly = 0; ly < m; ++ly) {
      if (seen[ly]) continue;
      std::uint32_t size = 0;
      std::uint32_t k = ly;
      do {
        seen[k] = true;
        ++size;
        k = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * p % m);
      } while (k != ly);
      reps.emplace_back(ly, size);
    }
  }

  std::int64_t total = row_sum(zech.zero);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  const auto nreps = static_cast<std::int64_t>(reps.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) num_threads(nt)
  for (std::int64_t r = 0; r < nreps; ++r) total += static_cast<std::int64_t>(reps[r].second) * row_sum(reps[r].first);

  // line x = 0: d(0, 1, z), then the point (0:0:1)
  auto line_value = [&](std::uint32_t lz) {
    std::uint32_t acc = zech.zero;
    for (int j = 6; j >= 0; --j) acc = L.add(L.mul(acc, lz), clog[6 - j][j]);
    return acc;
  };
  total += L.chi(line_value(zech.zero));
  for (std::uint32_t lz = 0; lz < m; ++lz) total += L.chi(line_value(lz));
  total += L.chi(clog[0][6]);

  const std::uint64_t q = field.q();
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(q * q + q + 1) + total);
}

std::vector<std::uint64_t> count_series(const MultiPoly& d, std::uint32_t p, unsigned max_n, int threads) {
  std::vector<std::uint64_t> out;
  for (unsigned n = 1; n <= max_n; ++n) out.push_back(count_points_double_cover(d, fq::make_field(p, n), threads));
  return out;
}

std::vector<Integer> traces_from_counts(const std::vector<std::uint64_t>& counts, std::uint32_t p) {
  std::vector<Integer> out;
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    Integer c(std::to_string(counts[n - 1]));
    out.push_back(c - 1 - pow_int(Integer(p), 2 * n));
  }
  return out;
}

std::vector<Rational> elementary_from_power_sums(const std::vector<Integer>& power_sums) {
  std::vector<Rational> e{Rational(1)};
  for (std::size_t k = 1; k <= power_sums.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * Rational(power_sums[i - 1]);
      acc += (i % 2 == 1) ? term : Rational(-term);
    }
    e.push_back(acc / static_cast<long>(k));
  }
  return e;
}

namespace {

constexpr int kDegree = 22;

// Max | |root| - 1 | over the roots of the squarefree part; repeated roots
// would make the companion eigenvalues ill-conditioned.
double unit_circle_deviation(const std::vector<Rational>& coeffs) {
  MultiPoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    poly::Exponent e{};
    e[poly::Var::T] = static_cast<std::uint16_t>(i);
    if (coeffs[i] != 0) f += MultiPoly::monomial(e, coeffs[i]);
  }
  const MultiPoly sqf = poly::squarefree_part(f);
  const int n = sqf.degree_in(poly::Var::T);
  if (n <= 0) return 0;
  std::vector<Rational> monic(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& [e, c] : sqf.terms()) monic[e[poly::Var::T]] = c;
  const Rational lead = monic.back();
  for (auto& c : monic) c /= lead;

  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat comp = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<long double>(monic[i].get_d());
  Eigen::EigenSolver<Mat> solver(comp, false);
  double worst = 0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, static_cast<double>(std::abs(std::abs(solver.eigenvalues()(i)) - 1.0L)));
  return worst;
}

}  // namespace

std::vector<Rational> normalize_charpoly(const std::vector<Integer>& phi, std::uint32_t p) {
  std::vector<Rational> out;
  const auto deg = static_cast<unsigned long>(phi.size() - 1);
  for (std::size_t i = 0; i < phi.size(); ++i)
    out.push_back(make_rational(phi[i], pow_int(Integer(p), deg - i)));
  return out;
}

Charpoly charpoly_from_traces(const std::vector<Integer>& traces, std::uint32_t p, double tolerance) {
  if (traces.size() != 11) throw Error("charpoly_from_traces: exactly 11 traces are required");
  const std::vector<Rational> e = elementary_from_power_sums(traces);
  const bool integral = std::all_of(e.begin(), e.end(), [](const Rational& r) { return r.get_den() == 1; });
  Charpoly out;
  out.p = p;
  int survivors = 0;
  for (int eps : {1, -1}) {
    CharpolyCandidate cand;
    cand.epsilon = eps;
    cand.integral = integral;
    std::vector<Rational> E(kDegree + 1);
    for (int k = 0; k <= 11; ++k) E[k] = e[k];
    for (int k = 0; k <= 10; ++k)
      E[kDegree - k] = Rational(eps) * Rational(pow_int(Integer(p), kDegree - 2 * k)) * e[k];
    cand.middle_consistent = (eps == 1) || e[11] == 0;
    cand.coefficients.resize(kDegree + 1);
    for (int i = 0; i <= kDegree; ++i) cand.coefficients[i] = (i % 2 == 0) ? E[kDegree - i] : Rational(-E[kDegree - i]);
    Rational at_p = 0;
    for (int i = kDegree; i >= 0; --i) at_p = at_p * p + cand.coefficients[i];
    cand.root_at_p = at_p == 0;
    std::vector<Rational> tilde;
    for (int i = 0; i <= kDegree; ++i)
      tilde.push_back(cand.coefficients[i] / Rational(pow_int(Integer(p), kDegree - i)));
    cand.max_modulus_deviation = unit_circle_deviation(tilde);
    cand.accepted = cand.integral && cand.middle_consistent && cand.root_at_p && cand.max_modulus_deviation < tolerance;
    if (cand.accepted) {
      ++survivors;
      out.epsilon = eps;
      out.phi.clear();
      for (const auto& c : cand.coefficients) out.phi.push_back(c.get_num());
      out.phi_tilde = tilde;
    }
    out.candidates.push_back(std::move(cand));
  }
  if (survivors != 1) {
    std::ostringstream os;
    os << "charpoly_from_traces: " << survivors << " candidates survive;";
    for (const auto& c : out.candidates)
      os << " eps=" << c.epsilon << " integral=" << c.integral << " middle=" << c.middle_consistent
         << " root_at_p=" << c.root_at_p << " deviation=" << c.max_modulus_deviation << ";";
    throw Error(os.str());
  }
  return out;
}

PartialCharpoly partial_charpoly(const std::vector<Integer>& traces, std::uint32_t p) {
  PartialCharpoly out;
  out.p = p;
  out.known = elementary_from_power_sums(traces);
  const int n = static_cast<int>(traces.size());
  for (int k = n + 1; k <= kDegree - n - 1; ++k) out.unknown.push_back(k);
  for (int k = 0; k <= std::min(n, 10); ++k) {
    std::ostringstream os;
    os << "e_" << (kDegree - k) << " = eps * " << p << "^" << (kDegree - 2 * k) << " * e_" << k;
    out.relations.push_back(os.str());
  }
  return out;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

unsigned euler_phi(unsigned n) {
  unsigned out = n;
  for (std::uint64_t r : prime_factors(n)) out = out / static_cast<unsigned>(r) * static_cast<unsigned>(r - 1);
  return out;
}

using IntPoly = std::vector<Integer>;

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {IntPoly{}, a};
  IntPoly q(a.size() - db, Integer(0));
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

IntPoly t_power_minus_one(unsigned d) {
  IntPoly f(d + 1, Integer(0));
  f[0] = -1;
  f[d] = 1;
  return f;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw Error("cyclotomic_polynomial: k must be positive");
  IntPoly num{Integer(1)};
  IntPoly den{Integer(1)};
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = moebius(k / d);
    if (mu == 1) num = multiply(num, t_power_minus_one(d));
    if (mu == -1) den = multiply(den, t_power_minus_one(d));
  }
  auto [q, r] = divide_monic(num, den);
  if (!r.empty()) throw Error("internal: cyclotomic division not exact");
  return q;
}

int cyclotomic_root_count(const std::vector<Rational>& poly_in) {
  Integer lcm = 1;
  for (const auto& c : poly_in) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly f;
  for (const auto& c : poly_in) f.push_back(Integer(c * Rational(lcm)));
  trim(f);
  if (f.empty()) throw Error("cyclotomic_root_count: zero polynomial");
  int count = 0;
  unsigned deg = static_cast<unsigned>(f.size() - 1);
  // phi(k) >= sqrt(k / 2), so phi(k) <= deg forces k <= 2 deg^2
  const unsigned bound = 2 * deg * deg + 2;
  for (unsigned k = 1; k <= bound && deg > 0; ++k) {
    if (euler_phi(k) > deg) continue;
    const IntPoly cyc = cyclotomic_polynomial(k);
    for (;;) {
      if (f.size() < cyc.size()) break;
      auto [q, r] = divide_monic(f, cyc);
      if (!r.empty()) break;
      f = q;
      deg = static_cast<unsigned>(f.size() - 1);
      count += static_cast<int>(euler_phi(k));
    }
  }
  return count;
}

int picard_bound(const Charpoly& charpoly) { return cyclotomic_root_count(charpoly.phi_tilde); }

}  // namespace cliff::pointcount
