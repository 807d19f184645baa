#include "cliff/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cliff::poly {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < kVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (std::size_t i = 0; i < kVars; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (std::size_t i = 0; i < kVars; ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent out{};
  for (std::size_t i = 0; i < kVars; ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = kVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

MultiPoly::MultiPoly(const Rational& c) : MultiPoly(monomial(Exponent{}, c)) {}

MultiPoly MultiPoly::variable(int var) {
  Exponent e{};
  e[var] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p;
  if (c == 0) return p;
  // mpq comparison assumes lowest terms
  Rational canon = c;
  canon.canonicalize();
  p.terms_.emplace(e, canon);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error("constant_value: polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : poly::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return poly::total_degree(t.first) == d; });
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw Error("leading_exponent of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading_coefficient of zero polynomial");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(exponent_add(ea, eb), ca * cb);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    out.add_term(f, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, kVars>& images) const {
  MultiPoly out;
  std::array<std::vector<MultiPoly>, kVars> powers;
  for (std::size_t i = 0; i < kVars; ++i) powers[i].push_back(MultiPoly(1));
  auto power = [&](std::size_t var, unsigned k) -> const MultiPoly& {
    while (powers[var].size() <= k) powers[var].push_back(powers[var].back() * images[var]);
    return powers[var][k];
  };
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < kVars; ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(const std::array<Rational, kVars>& point) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kVars; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(num, den);
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  MultiPoly out = *this;
  out *= Rational(1 / c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << kVarNames[i];
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << a.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int peek() {
    skip();
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }

  static int var_index(int ch) {
    for (std::size_t i = 0; i < kVars; ++i)
      if (kVarNames[i][0] == ch) return static_cast<int>(i);
    return -1;
  }

  bool starts_factor(int ch) { return ch == '(' || std::isdigit(ch) || (ch >= 0 && var_index(ch) >= 0); }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      int ch = peek();
      if (ch == '+') {
        ++pos_;
        acc += term();
      } else if (ch == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      int ch = peek();
      if (ch == '*') {
        ++pos_;
        acc *= unary();
      } else if (ch == '/') {
        std::size_t at = ++pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        acc *= Rational(1 / d.constant_value());
      } else if (starts_factor(ch)) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    int ch = peek();
    if (ch == '-') {
      ++pos_;
      return -unary();
    }
    if (ch == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      std::size_t at = (skip(), pos_);
      if (peek() < 0 || !std::isdigit(peek())) throw ParseError("expected exponent", at);
      Integer e = number();
      if (e > 10000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MultiPoly primary() {
    int ch = peek();
    if (ch < 0) throw ParseError("unexpected end of input", pos_);
    if (std::isdigit(ch)) return MultiPoly(Rational(number()));
    if (ch == '(') {
      std::size_t open = pos_++;
      MultiPoly inner = expr();
      if (peek() != ')') throw ParseError("unbalanced parenthesis opened at " + std::to_string(open), pos_);
      ++pos_;
      return inner;
    }
    int v = var_index(ch);
    if (v >= 0) {
      ++pos_;
      return MultiPoly::variable(v);
    }
    throw ParseError(std::string("unexpected '") + static_cast<char>(ch) + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int first_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t i = 0; i < kVars; ++i)
    if (a.uses(static_cast<int>(i)) || b.uses(static_cast<int>(i))) return static_cast<int>(i);
  return -1;
}

MultiPoly content_in(const MultiPoly& f, int var) {
  MultiPoly g;
  for (const auto& c : f.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: expected exact division");
  return *q;
}

MultiPoly var_power(int var, int k) {
  Exponent e{};
  e[var] = static_cast<std::uint16_t>(k);
  return MultiPoly::monomial(e, 1);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
  const int db = b.degree_in(var);
  const MultiPoly lcb = b.coefficients_in(var)[db];
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    MultiPoly lr = r.coefficients_in(var)[dr];
    r = lcb * r - lr * var_power(var, dr - db) * b;
    if (!r.is_zero()) r = r.primitive();
  }
  return r;
}

}  // namespace

MultiPoly parse(const std::string& text) { return Parser(text).run(); }

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("divide_exact: division by zero polynomial");
  MultiPoly q;
  MultiPoly r = a;
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    if (!divides(lb, lr)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(exponent_sub(lr, lb), r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  const int v = first_variable(a, b);
  if (!a.uses(v)) return gcd(a, content_in(b, v));
  if (!b.uses(v)) return gcd(content_in(a, v), b);

  MultiPoly ca = content_in(a, v);
  MultiPoly cb = content_in(b, v);
  MultiPoly g = gcd(ca, cb);
  MultiPoly pa = exact_quotient(a, ca).primitive();
  MultiPoly pb = exact_quotient(b, cb).primitive();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    pa = pb;
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pa = MultiPoly(1);
      break;
    }
    pb = exact_quotient(r, content_in(r, v)).primitive();
  }
  if (!pa.is_constant()) pa = exact_quotient(pa, content_in(pa, v));
  return (pa * g).primitive();
}

namespace {

// Yun's algorithm in `var` for f primitive with respect to var.
void yun(const MultiPoly& f, int var, std::map<int, MultiPoly>& out) {
  MultiPoly fp = f.derivative(var);
  MultiPoly a0 = gcd(f, fp);
  MultiPoly b = exact_quotient(f, a0);
  MultiPoly c = exact_quotient(fp, a0);
  MultiPoly d = c - b.derivative(var);
  for (int i = 1; !b.is_constant(); ++i) {
    MultiPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative(var);
    if (!a.is_constant()) {
      auto [it, inserted] = out.emplace(i, a);
      if (!inserted) it->second *= a;
    }
  }
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw Error("squarefree_decomposition: zero polynomial");
  std::map<int, MultiPoly> acc;
  MultiPoly rest = f;
  while (!rest.is_constant()) {
    int v = first_variable(rest, MultiPoly());
    MultiPoly c = content_in(rest, v);
    yun(exact_quotient(rest, c).primitive(), v, acc);
    rest = c;
  }
  SquarefreeDecomposition out;
  MultiPoly product(1);
  for (auto& [mult, factor] : acc) {
    MultiPoly p = factor.primitive();
    product *= p.pow(static_cast<unsigned>(mult));
    out.factors.emplace_back(std::move(p), mult);
  }
  MultiPoly unit = exact_quotient(f, product);
  if (!unit.is_constant()) throw Error("internal: squarefree decomposition lost a factor");
  out.unit = unit.constant_value();
  return out;
}

MultiPoly squarefree_part(const MultiPoly& f) {
  MultiPoly out(1);
  for (const auto& [factor, mult] : squarefree_decomposition(f).factors) out *= factor;
  return out;
}

MultiPoly reduce_mod_squares(const MultiPoly& f) {
  SquarefreeDecomposition sq = squarefree_decomposition(f);
  MultiPoly out(cliff::squarefree_part(Integer(sq.unit.get_num() * sq.unit.get_den())));
  for (const auto& [factor, mult] : sq.factors)
    if (mult % 2 == 1) out *= factor;
  return out;
}

std::vector<std::pair<Exponent, std::uint64_t>> reduce_mod(const MultiPoly& f, std::uint64_t p) {
  std::vector<std::pair<Exponent, std::uint64_t>> out;
  Integer mod(static_cast<unsigned long>(p));
  for (const auto& [e, c] : f.terms()) {
    Integer num, den;
    mpz_fdiv_r(num.get_mpz_t(), c.get_num_mpz_t(), mod.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), c.get_den_mpz_t(), mod.get_mpz_t());
    if (den == 0) throw Error("reduce_mod: p divides a coefficient denominator");
    if (num == 0) continue;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Integer v = num * inv % mod;
    out.emplace_back(e, v.get_ui());
  }
  return out;
}

RatFunc::RatFunc(const MultiPoly& n) : num_(n), den_(1) {}

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) {
  if (d.is_zero()) throw Error("RatFunc: zero denominator");
  if (n.is_zero()) {
    num_ = MultiPoly(0);
    den_ = MultiPoly(1);
    return;
  }
  MultiPoly g = gcd(n, d);
  num_ = exact_quotient(n, g);
  den_ = exact_quotient(d, g);
  Rational lc = den_.leading_coefficient();
  num_ *= Rational(1 / lc);
  den_ *= Rational(1 / lc);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace cliff::poly
