#include "cliff/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <utility>

namespace cliff::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error("IntMatrix: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw Error("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("IntMatrix: product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}
void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}
// row_dst += f * row_src
void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
}
void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
}

// (col_c, col_j) <- (s col_c + t col_j, -b/g col_c + a/g col_j)
void combine_cols(IntMatrix& m, std::size_t c, std::size_t j, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, c);
    Integer y = m(i, j);
    m(i, c) = s * x + t * y;
    m(i, j) = u * x + v * y;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(n);
  IntMatrix right = IntMatrix::identity(k);
  const std::size_t steps = std::min(n, k);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < k; ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < best) {
            best = abs(a(i, j));
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) goto finished;
      if (pi != t) {
        swap_rows(a, t, pi);
        swap_rows(left, t, pi);
      }
      if (pj != t) {
        swap_cols(a, t, pj);
        swap_cols(right, t, pj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(a, t, i, Integer(1));
            add_row(left, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < k; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < n; ++j) left(t, j) = -left(t, j);
    }
  }
finished:
  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a(t, t);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

ColumnEchelon column_echelon(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix tr = IntMatrix::identity(m.cols());
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < a.cols(); ++i) {
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, c) == 0) {
        swap_cols(a, c, j);
        swap_cols(tr, c, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(i, c).get_mpz_t(), a(i, j).get_mpz_t());
      Integer u = -a(i, j) / g;
      Integer v = a(i, c) / g;
      combine_cols(a, c, j, s, t, u, v);
      combine_cols(tr, c, j, s, t, u, v);
    }
    if (a(i, c) != 0) ++c;
  }
  return ColumnEchelon{std::move(a), std::move(tr), c};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  ColumnEchelon ce = column_echelon(generators);
  IntMatrix basis(generators.rows(), ce.rank);
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < ce.rank; ++j) basis(i, j) = ce.echelon(i, j);
  return basis;
}

GramLattice::GramLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_symmetric()) throw Error("GramLattice: Gram matrix must be square and symmetric");
  if (gram_.rows() == 0) throw Error("GramLattice: rank must be positive");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw Error("GramLattice: label count does not match rank");
}

Integer GramLattice::pair(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error("GramLattice::pair: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_(i, j) * b[j];
  }
  return s;
}

Rational GramLattice::pair(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error("GramLattice::pair: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * Rational(gram_(i, j)) * b[j];
  }
  return s;
}

Sublattice Sublattice::whole(const GramLattice& lattice) {
  Sublattice s{lattice, {}};
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    IntVector e(lattice.rank(), Integer(0));
    e[i] = 1;
    s.basis.push_back(e);
  }
  return s;
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_columns(basis, ambient.rank()); }

GramLattice Sublattice::induced() const {
  IntMatrix b = basis_matrix();
  return GramLattice(b.transpose() * ambient.gram() * b);
}

IntVector Sublattice::to_ambient(const IntVector& coefficients) const {
  return basis_matrix().apply(coefficients);
}

Integer discriminant(const GramLattice& lattice) { return determinant(lattice.gram()); }

bool is_positive_definite(const GramLattice& lattice) {
  const IntMatrix& g = lattice.gram();
  for (std::size_t k = 1; k <= lattice.rank(); ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

namespace {

void normalize_sign(IntVector& v) {
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Integer& y : v) y = -y;
    return;
  }
}

// Coefficient vectors c with c^T G c == target, via the completed-square
// decomposition of G over Q and exact interval bounds at each level.
std::vector<IntVector> enumerate_norm(const IntMatrix& gram, const Integer& target) {
  const std::size_t r = gram.rows();
  std::vector<std::vector<Rational>> q(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) q[i][j] = Rational(gram(i, j));
  for (std::size_t i = 0; i < r; ++i) {
    if (q[i][i] <= 0) throw Error("vectors_of_norm: induced form is not positive definite");
    for (std::size_t j = i + 1; j < r; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < r; ++k)
      for (std::size_t l = k; l < r; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  std::vector<IntVector> out;
  IntVector x(r, Integer(0));
  std::function<void(std::size_t, const Rational&)> level = [&](std::size_t idx, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = idx + 1; j < r; ++j) center -= q[idx][j] * Rational(x[j]);
    const double radius = std::sqrt(std::max(0.0, Rational(remaining / q[idx][idx]).get_d()));
    Integer lo(std::floor(center.get_d() - radius) - 1);
    Integer hi(std::ceil(center.get_d() + radius) + 1);
    auto cost = [&](const Integer& v) -> Rational {
      Rational d = Rational(v) - center;
      return q[idx][idx] * d * d;
    };
    while (lo < hi && cost(lo) > remaining && Rational(lo) < center) ++lo;
    while (hi > lo && cost(hi) > remaining && Rational(hi) > center) --hi;
    for (Integer v = lo; v <= hi; ++v) {
      Rational c = cost(v);
      if (c > remaining) continue;
      x[idx] = v;
      Rational rest = remaining - c;
      if (idx == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        level(idx - 1, rest);
      }
    }
    x[idx] = 0;
  };
  level(r - 1, Rational(target));
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

}  // namespace

std::vector<IntVector> vectors_of_norm(const Sublattice& sub, const Integer& n) {
  if (sub.rank() == 0) return {};
  GramLattice induced = sub.induced();
  if (!is_positive_definite(induced)) throw Error("vectors_of_norm: induced form is not positive definite");
  std::set<IntVector> found;
  for (IntVector c : enumerate_norm(induced.gram(), n)) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
    if (zero) continue;
    IntVector v = sub.to_ambient(c);
    normalize_sign(v);
    found.insert(v);
  }
  return {found.begin(), found.end()};
}

std::vector<IntVector> short_roots(const Sublattice& sub) {
  std::vector<IntVector> out;
  for (IntVector& v : vectors_of_norm(sub, 2)) {
    if (content(v) == 1) out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> long_roots(const Sublattice& sub) {
  std::vector<IntVector> out;
  for (IntVector& v : vectors_of_norm(sub, 6)) {
    bool divisible = std::all_of(sub.basis.begin(), sub.basis.end(), [&](const IntVector& w) {
      return mpz_divisible_ui_p(sub.ambient.pair(v, w).get_mpz_t(), 3) != 0;
    });
    if (divisible) out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> long_roots_relative(const Sublattice& sub, const IntVector& h) {
  if (h.size() != sub.ambient.rank()) throw Error("long_roots_relative: class has wrong dimension");
  std::vector<IntVector> out;
  for (IntVector& v : vectors_of_norm(sub, 6)) {
    if (sub.ambient.pair(v, h) != 0) continue;
    auto congruent = [&](int sign) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!mpz_divisible_ui_p(Integer(v[i] + sign * h[i]).get_mpz_t(), 3)) return false;
      return true;
    };
    if (congruent(1) || congruent(-1)) out.push_back(std::move(v));
  }
  return out;
}

Sublattice orthogonal_complement(const Sublattice& sub) {
  const GramLattice& amb = sub.ambient;
  if (determinant(amb.gram()) == 0) throw Error("orthogonal_complement: ambient lattice is singular");
  Sublattice out{amb, {}};
  if (sub.rank() == 0) return Sublattice::whole(amb);
  IntMatrix constraints = sub.basis_matrix().transpose() * amb.gram();
  ColumnEchelon ce = column_echelon(constraints);
  for (std::size_t j = ce.rank; j < amb.rank(); ++j) {
    IntVector v = ce.transform.column(j);
    normalize_sign(v);
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool is_saturated(const Sublattice& sub) {
  if (sub.rank() == 0) return true;
  SmithForm snf = smith_normal_form(sub.basis_matrix());
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Integer& d) { return d == 1; });
}

bool is_squarefree(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return false;
  return squarefree_part(m) == m;
}

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<long> invariants, std::vector<RatVector> generators,
                                         std::vector<std::vector<Rational>> quadratic_gram)
    : invariants_(std::move(invariants)), generators_(std::move(generators)), pairing_(std::move(quadratic_gram)) {
  if (invariants_.size() != generators_.size() || pairing_.size() != generators_.size())
    throw Error("FiniteQuadraticForm: inconsistent generator data");
}

long FiniteQuadraticForm::order() const {
  long n = 1;
  for (long d : invariants_) n *= d;
  return n;
}

std::vector<FiniteQuadraticForm::Element> FiniteQuadraticForm::elements() const {
  std::vector<Element> out;
  Element cur(invariants_.size(), 0);
  const long total = order();
  out.reserve(static_cast<std::size_t>(total));
  for (long idx = 0; idx < total; ++idx) {
    out.push_back(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (++cur[i] < invariants_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::add(const Element& a, const Element& b) const {
  Element c(invariants_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % invariants_[i];
  return c;
}

Rational FiniteQuadraticForm::q(const Element& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rational(x[i] * x[i]) * pairing_[i][i];
    for (std::size_t j = i + 1; j < x.size(); ++j) s += 2 * Rational(x[i] * x[j]) * pairing_[i][j];
  }
  return mod_rational(s, 2);
}

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i] * y[j]) * pairing_[i][j];
  return mod_rational(s, 1);
}

std::vector<long> FiniteQuadraticForm::primary_decomposition() const {
  std::vector<std::pair<long, long>> parts;  // (prime, prime power)
  for (long d : invariants_) {
    long rest = d;
    for (long p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      long pk = 1;
      while (rest % p == 0) {
        rest /= p;
        pk *= p;
      }
      parts.emplace_back(p, pk);
    }
    if (rest > 1) parts.emplace_back(rest, rest);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<long> out;
  for (const auto& [p, pk] : parts) out.push_back(pk);
  return out;
}

FiniteQuadraticForm discriminant_form(const GramLattice& lattice, const IntMatrix& quadratic_gram) {
  const std::size_t n = lattice.rank();
  if (quadratic_gram.rows() != n || !quadratic_gram.is_symmetric())
    throw Error("discriminant_form: quadratic form has wrong shape");
  if (determinant(lattice.gram()) == 0) throw Error("discriminant_group: Gram matrix is singular");
  for (std::size_t i = 0; i < n; ++i)
    if (!mpz_even_p(quadratic_gram(i, i).get_mpz_t()))
      throw Error("discriminant_group: quadratic form has an odd diagonal entry");

  SmithForm snf = smith_normal_form(lattice.gram());
  std::vector<long> invariants;
  std::vector<RatVector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.diagonal[i];
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw Error("discriminant_group: invariant factor too large");
    invariants.push_back(d.get_si());
    RatVector g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = make_rational(snf.right(k, i), d);
    generators.push_back(std::move(g));
  }

  auto qpair = [&](const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * Rational(quadratic_gram(i, j)) * b[j];
    return s;
  };
  // b(g, A) must be integral for q to descend to A*/A
  for (const RatVector& g : generators) {
    for (std::size_t j = 0; j < n; ++j) {
      RatVector e(n, Rational(0));
      e[j] = 1;
      if (qpair(g, e).get_den() != 1)
        throw Error("discriminant_form: quadratic form is not integral on the dual lattice");
    }
  }
  std::vector<std::vector<Rational>> pairing(generators.size(), std::vector<Rational>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j) pairing[i][j] = qpair(generators[i], generators[j]);
  return FiniteQuadraticForm(std::move(invariants), std::move(generators), std::move(pairing));
}

FiniteQuadraticForm discriminant_group(const GramLattice& lattice) {
  return discriminant_form(lattice, lattice.gram());
}

int milgram_signature(const FiniteQuadraticForm& form) {
  std::complex<double> sum = 0.0;
  for (const auto& x : form.elements()) {
    const double phase = std::numbers::pi * form.q(x).get_d();
    sum += std::polar(1.0, phase);
  }
  const double expected = std::sqrt(static_cast<double>(form.order()));
  if (std::abs(std::abs(sum) - expected) > 1e-6 * expected)
    throw Error("milgram_signature: Gauss sum modulus is not sqrt|A| (degenerate form)");
  const double eighths = std::arg(sum) / (std::numbers::pi / 4.0);
  const double rounded = std::round(eighths);
  if (std::abs(eighths - rounded) * (std::numbers::pi / 4.0) > 1e-6)
    throw Error("milgram_signature: Gauss sum phase is not a multiple of 2pi/8");
  return static_cast<int>(((static_cast<long>(rounded) % 8) + 8) % 8);
}

std::vector<Overlattice> proper_overlattices(const GramLattice& lattice) {
  FiniteQuadraticForm form = discriminant_group(lattice);
  const auto elements = form.elements();
  const std::size_t count = elements.size();
  auto encode = [&](const FiniteQuadraticForm::Element& e) {
    long idx = 0;
    long scale = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      idx += e[i] * scale;
      scale *= form.invariants()[i];
    }
    return static_cast<std::size_t>(idx);
  };
  std::vector<bool> isotropic(count);
  for (std::size_t i = 0; i < count; ++i) isotropic[i] = form.q(elements[i]) == 0;

  std::set<std::vector<std::size_t>> seen{{0}};
  std::vector<std::vector<std::size_t>> queue{{0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<std::size_t> group = queue[head];
    for (std::size_t x = 1; x < count; ++x) {
      if (!isotropic[x] || std::binary_search(group.begin(), group.end(), x)) continue;
      std::set<std::size_t> grown;
      for (std::size_t h : group) {
        FiniteQuadraticForm::Element cur = elements[h];
        do {
          grown.insert(encode(cur));
          cur = form.add(cur, elements[x]);
        } while (encode(cur) != h);
      }
      bool ok = std::all_of(grown.begin(), grown.end(), [&](std::size_t e) { return isotropic[e]; });
      if (!ok) continue;
      std::vector<std::size_t> sorted(grown.begin(), grown.end());
      if (seen.insert(sorted).second) queue.push_back(std::move(sorted));
    }
  }

  const std::size_t n = lattice.rank();
  std::vector<Overlattice> out;
  for (std::size_t gi = 1; gi < queue.size(); ++gi) {
    const auto& group = queue[gi];
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n, Rational(0));
      e[i] = 1;
      gens.push_back(e);
    }
    for (std::size_t h : group) {
      if (h == 0) continue;
      RatVector lift(n, Rational(0));
      for (std::size_t g = 0; g < form.generators().size(); ++g)
        for (std::size_t k = 0; k < n; ++k) lift[k] += Rational(elements[h][g]) * form.generators()[g][k];
      gens.push_back(std::move(lift));
    }
    Integer den = 1;
    for (const auto& v : gens)
      for (const Rational& c : v) den = lcm(den, Integer(c.get_den()));
    IntMatrix scaled(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) {
        Rational s = gens[j][i] * Rational(den);
        scaled(i, j) = s.get_num();
      }
    IntMatrix basis_int = lattice_basis(scaled);
    std::vector<RatVector> basis(n, RatVector(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) basis[j][i] = make_rational(basis_int(i, j), den);
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = lattice.pair(basis[i], basis[j]);
        if (v.get_den() != 1) throw Error("proper_overlattices: non-integral overlattice");
        gram(i, j) = v.get_num();
      }
    out.push_back(Overlattice{GramLattice(std::move(gram)), std::move(basis), static_cast<long>(group.size())});
  }
  return out;
}

}  // namespace cliff::lattice
