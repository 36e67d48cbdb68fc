#include "cdc/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

// Discrete-log tables are built for fields up to this order.
constexpr std::uint32_t kTableLimit = 1u << 16;

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = n;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  while (n % p == 0) n /= p;
  return n == 1;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q) {
  if (q < 2) throw ParameterError("prime power must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) throw ParameterError("not a prime power: " + std::to_string(q));
  return {p, e};
}

Elem Field::sub_add(Elem a, Elem b) const {
  return base_ ? base_->add(a, b) : (a + b) % p_;
}

Elem Field::sub_neg(Elem a) const {
  return base_ ? base_->neg(a) : (a == 0 ? 0 : p_ - a);
}

Elem Field::sub_mul(Elem a, Elem b) const {
  return base_ ? base_->mul(a, b)
               : static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
}

Elem Field::digit(Elem a, std::uint32_t i) const {
  for (std::uint32_t j = 0; j < i; ++j) a /= sub_q_;
  return a % sub_q_;
}

std::vector<Elem> Field::digits(Elem a) const {
  std::vector<Elem> c(deg_);
  for (std::uint32_t i = 0; i < deg_; ++i) {
    c[i] = a % sub_q_;
    a /= sub_q_;
  }
  return c;
}

Elem Field::from_digits(const std::vector<Elem>& c) const {
  if (c.size() > deg_) throw ParameterError("too many digits");
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= sub_q_) throw ParameterError("digit out of range");
    v = v * sub_q_ + c[i];
  }
  return v;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2 && !base_) return a ^ b;  // digitwise mod-2 addition on the packed encoding
  Elem r = 0;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    r += sub_add(a % sub_q_, b % sub_q_) * static_cast<Elem>(pw);
    a /= sub_q_;
    b /= sub_q_;
    pw *= sub_q_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    r += sub_neg(a % sub_q_) * static_cast<Elem>(pw);
    a /= sub_q_;
    pw *= sub_q_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_nolut(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  // schoolbook polynomial product over the subfield
  std::vector<Elem> prod(2 * deg_ - 1, 0);
  std::vector<Elem> da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < deg_; ++j)
      if (db[j] != 0) prod[i + j] = sub_add(prod[i + j], sub_mul(da[i], db[j]));
  }
  // reduce by the monic modulus
  for (std::size_t i = prod.size(); i-- > deg_;) {
    Elem c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < deg_; ++j)
      prod[i - deg_ + j] =
          sub_add(prod[i - deg_ + j], sub_neg(sub_mul(c, modulus_[j])));
  }
  Elem v = 0;
  for (std::uint32_t i = deg_; i-- > 0;) v = v * sub_q_ + prod[i];
  return v;
}

Elem Field::mul(Elem a, Elem b) const {
  if (!exp_.empty())
    return (a && b) ? exp_[log_[a] + log_[b]] : 0;
  return mul_nolut(a, b);
}

Elem Field::pow_nolut(Elem a, std::uint64_t n) const {
  Elem r = 1, base = a;
  while (n) {
    if (n & 1) r = mul_nolut(r, base);
    base = mul_nolut(base, base);
    n >>= 1;
  }
  return r;
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  std::uint64_t ord = q_ - 1;
  if (!exp_.empty())
    return exp_[static_cast<std::uint64_t>(log_[a]) * (n % ord) % ord];
  return pow_nolut(a, n % ord);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ParameterError("inversion of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow_nolut(a, q_ - 2);
}

Elem Field::frobenius(Elem a, std::uint32_t i) const {
  if (a == 0) return 0;
  std::uint64_t ord = q_ - 1;
  std::uint64_t e = 1;
  for (std::uint32_t j = 0; j < i; ++j) e = e * sub_q_ % ord;
  return pow(a, e);
}

void Field::build_tables() {
  if (q_ > kTableLimit) return;
  const std::uint32_t n = q_ - 1;
  auto factors = prime_factors(n);
  Elem gen = 0;
  for (Elem a = 2; a < q_; ++a) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_nolut(a, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = a;
      break;
    }
  }
  if (gen == 0 && q_ > 2) return;  // unreachable for a true field
  exp_.assign(2 * n, 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_nolut(cur, gen == 0 ? 1 : gen);
  }
  for (std::uint32_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

// Polynomial helpers used during modulus search, over an arbitrary
// coefficient field.
namespace {

struct CoeffField {
  std::uint32_t q;
  const Field* ext;  // base field object, or null for GF(p) with q = p
  Elem add(Elem a, Elem b) const { return ext ? ext->add(a, b) : (a + b) % q; }
  Elem neg(Elem a) const { return ext ? ext->neg(a) : (a == 0 ? 0 : q - a); }
  Elem mul(Elem a, Elem b) const {
    return ext ? ext->mul(a, b)
               : static_cast<Elem>(static_cast<std::uint64_t>(a) * b % q);
  }
  Elem inv(Elem a) const {
    if (ext) return ext->inv(a);
    Elem r = 1, base = a;
    std::uint32_t n = q - 2;
    while (n) {
      if (n & 1) r = mul(r, base);
      base = mul(base, base);
      n >>= 1;
    }
    return r;
  }
};

int poly_deg(const std::vector<Elem>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

// remainder of a modulo b (b nonzero)
std::vector<Elem> poly_mod(std::vector<Elem> a, const std::vector<Elem>& b,
                           const CoeffField& cf) {
  int db = poly_deg(b);
  Elem lead_inv = cf.inv(b[db]);
  for (int i = poly_deg(a); i >= db; i = poly_deg(a)) {
    Elem c = cf.mul(a[i], lead_inv);
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = cf.add(a[i - db + j], cf.neg(cf.mul(c, b[j])));
  }
  a.resize(std::max(poly_deg(a) + 1, 0));
  return a;
}

bool poly_is_irreducible(const std::vector<Elem>& f, const CoeffField& cf) {
  int df = poly_deg(f);
  if (df <= 0) return false;
  if (df == 1) return true;
  // trial division by every monic polynomial of degree 1..df/2
  for (int dg = 1; dg <= df / 2; ++dg) {
    std::vector<Elem> g(dg + 1, 0);
    g[dg] = 1;
    std::uint64_t total = pow_u64(cf.q, dg);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < dg; ++i) {
        g[i] = static_cast<Elem>(t % cf.q);
        t /= cf.q;
      }
      if (poly_mod(f, g, cf).empty()) return false;
    }
  }
  return true;
}

// The lexicographically smallest monic irreducible of the given degree,
// coefficients compared low-degree-first.
std::vector<Elem> smallest_irreducible(std::uint32_t degree,
                                       const CoeffField& cf) {
  std::vector<Elem> f(degree + 1, 0);
  f[degree] = 1;
  if (degree == 1) return f;  // x itself
  std::vector<Elem> c(degree, 0);
  for (;;) {
    for (std::uint32_t i = 0; i < degree; ++i) f[i] = c[i];
    if (poly_is_irreducible(f, cf)) return f;
    // advance: highest-degree coefficient varies fastest
    std::uint32_t i = degree;
    while (i-- > 0) {
      if (++c[i] < cf.q) break;
      c[i] = 0;
      if (i == 0) throw ParameterError("no irreducible polynomial found");
    }
  }
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw ParameterError("p must be prime");
  if (e < 1) throw ParameterError("extension degree must be >= 1");
  std::uint64_t q = pow_u64(p, e);
  if (q > kMaxOrder) throw ParameterError("field order exceeds limit");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = static_cast<std::uint32_t>(q);
  f->deg_ = e;
  f->sub_q_ = p;
  CoeffField cf{p, nullptr};
  f->modulus_ = smallest_irreducible(e, cf);
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::uint32_t m) {
  if (!base) throw ParameterError("null base field");
  if (m < 1) throw ParameterError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= base->q();
    if (q > kMaxOrder) throw ParameterError("field order exceeds limit");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->p();
  f->e_ = base->e() * m;
  f->q_ = static_cast<std::uint32_t>(q);
  f->deg_ = m;
  f->sub_q_ = base->q();
  f->base_ = base;
  CoeffField cf{base->q(), base.get()};
  f->modulus_ = smallest_irreducible(m, cf);
  f->build_tables();
  return f;
}

bool Field::operator==(const Field& other) const {
  return p_ == other.p_ && e_ == other.e_ && sub_q_ == other.sub_q_ &&
         modulus_ == other.modulus_;
}

}  // namespace cdc
