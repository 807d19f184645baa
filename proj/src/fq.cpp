#include "cliff/fq.hpp"

#include <algorithm>

namespace cliff::fq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyFp poly_mod(PolyFp a, const PolyFp& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

PolyFp poly_powmod(PolyFp base, std::uint64_t e, const PolyFp& m, std::uint32_t p) {
  PolyFp r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return r;
}

PolyFp poly_gcd(PolyFp a, PolyFp b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyFp poly_sub(PolyFp a, const PolyFp& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(const PolyFp& f_in, std::uint32_t p) {
  PolyFp f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  const PolyFp x{0, 1};
  auto x_pow_p_pow = [&](unsigned k) {
    PolyFp r = x;
    for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (!poly_sub(x_pow_p_pow(n), x, p).empty()) return false;
  for (std::uint64_t r : prime_factors(n)) {
    PolyFp g = poly_gcd(f, poly_sub(x_pow_p_pow(n / static_cast<unsigned>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FqField::FqField(std::uint32_t p, unsigned n, PolyFp modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error("FqField: p is not prime");
  if (n == 0) throw Error("FqField: degree must be positive");
  q_ = 1;
  for (unsigned i = 0; i < n; ++i) {
    pow_p_.push_back(q_);
    q_ *= p;
    if (q_ > (1ULL << 31)) throw Error("FqField: field too large for 32-bit encoding");
  }
  if (modulus_.size() != n + 1 || modulus_.back() != 1) throw Error("FqField: modulus must be monic of degree n");
  if (!is_irreducible(modulus_, p)) throw Error("FqField: modulus is reducible");
}

PolyFp FqField::digits(Element a) const {
  PolyFp d(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Element FqField::encode(const PolyFp& digits) const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
  return static_cast<Element>(v);
}

Element FqField::from_int(long c) const {
  long r = c % static_cast<long>(p_);
  return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
}

Element FqField::add(Element a, Element b) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return static_cast<Element>(out);
}

Element FqField::neg(Element a) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return static_cast<Element>(out);
}

Element FqField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FqField::mul(Element a, Element b) const {
  PolyFp r = poly_mulmod(digits(a), digits(b), modulus_, p_);
  r.resize(n_, 0);
  return encode(r);
}

Element FqField::pow(Element a, std::uint64_t e) const {
  Element r = 1;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

Element FqField::inv(Element a) const {
  if (a == 0) throw Error("FqField: inverse of zero");
  return pow(a, q_ - 2);
}

int FqField::quadratic_character(Element a) const {
  if (p_ == 2) throw Error("quadratic_character: characteristic 2");
  if (a == 0) return 0;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

Element FqField::primitive_element() const {
  const std::uint64_t order = q_ - 1;
  std::vector<std::uint64_t> primes = prime_factors(order);
  for (Element g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t r : primes)
      if (pow(g, order / r) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("primitive_element: none found");
}

FqField make_field(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw Error("make_field: p is not prime");
  if (n == 0) throw Error("make_field: degree must be positive");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    PolyFp f(n + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return FqField(p, n, f);
  }
  throw Error("make_field: no irreducible polynomial found");
}

ZechTables build_zech(const FqField& field) {
  if (field.p() == 2) throw Error("build_zech: odd characteristic required");
  ZechTables t;
  const auto q = static_cast<std::uint32_t>(field.q());
  t.modulus = q - 1;
  t.zero = q - 1;
  t.generator = field.primitive_element();
  t.exp.resize(q - 1);
  t.log.assign(q, t.zero);
  Element x = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    t.exp[k] = x;
    t.log[x] = k;
    x = field.mul(x, t.generator);
  }
  if (x != 1) throw Error("build_zech: generator order mismatch");
  t.zech.resize(q - 1);
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    Element y = t.exp[k];
    // 1 + y only touches the constant digit
    Element d0 = y % field.p();
    Element sum = y - d0 + (d0 + 1) % field.p();
    t.zech[k] = t.log[sum];
  }
  return t;
}

}  // namespace cliff::fq
