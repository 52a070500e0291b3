#include "polyexp/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

std::atomic<long> g_max_order{10000};

// Dense integer polynomials, low-order-first, used only for Phi_m.
using IPoly = std::vector<Int>;

void iprune(IPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Exact division of a by b (b monic); throws if the division leaves a
// remainder, which would mean a broken cyclotomic invariant.
IPoly idiv_exact(IPoly a, const IPoly& b) {
  if (b.empty() || !b.back().is_one()) throw Error("divisor must be monic");
  if (a.size() < b.size()) throw Error("non-exact polynomial division");
  IPoly q(a.size() - b.size() + 1, Int(0));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Int c = a[i];
    if (c.is_zero()) {
      if (i + 1 == b.size()) break;
      continue;
    }
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i + 1 == b.size()) break;
  }
  iprune(a);
  if (!(a.size() == 1 && a[0].is_zero())) throw Error("non-exact polynomial division");
  return q;
}

}  // namespace

long max_order() { return g_max_order.load(); }
void set_max_order(long cap) {
  if (cap < 1) throw InputError("order cap must be positive");
  g_max_order.store(cap);
}

std::vector<std::pair<long, int>> factorize(long m) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

long euler_phi(long m) {
  long phi = 1;
  for (auto [p, e] : factorize(m)) {
    long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

std::vector<long> divisors(long m) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(m)) {
    std::size_t n = out.size();
    long pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const CycPoly& cyclotomic_polynomial(long m) {
  if (m < 1) throw InputError("order must be positive");
  if (m > max_order()) throw InputError("order too large: " + std::to_string(m));

  static std::map<long, CycPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // X^m - 1 divided by Phi_d for every proper divisor d of m.
  std::function<const IPoly&(long)> compute = [&](long k) -> const IPoly& {
    static std::map<long, IPoly> raw;
    auto rit = raw.find(k);
    if (rit != raw.end()) return rit->second;
    IPoly f(static_cast<std::size_t>(k) + 1, Int(0));
    f[0] = Int(-1);
    f[static_cast<std::size_t>(k)] = Int(1);
    for (long d : divisors(k)) {
      if (d == k) continue;
      f = idiv_exact(std::move(f), compute(d));
    }
    return raw.emplace(k, std::move(f)).first->second;
  };

  const IPoly& f = compute(m);
  CycPoly poly;
  poly.order = m;
  poly.coeffs = ZVec(static_cast<Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) poly.coeffs[static_cast<Index>(i)] = f[i];
  if (poly.degree() != euler_phi(m)) throw Error("cyclotomic degree mismatch");
  return cache.emplace(m, std::move(poly)).first->second;
}

namespace {

// Reduces a rational polynomial modulo Phi_m in place and trims to length
// phi(m). `p` is low-order-first of any length.
QVec reduce_mod_phi(std::vector<Rat> p, long m) {
  const CycPoly& phi = cyclotomic_polynomial(m);
  const Index deg = phi.degree();
  if (p.size() < static_cast<std::size_t>(deg)) p.resize(static_cast<std::size_t>(deg), Rat(0));
  for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(deg);) {
    Rat c = p[i];
    if (c.is_zero()) continue;
    p[i] = Rat(0);
    std::size_t shift = i - static_cast<std::size_t>(deg);
    // p -= c * X^shift * Phi ; the X^{i} terms cancel since Phi is monic.
    for (Index j = 0; j < deg; ++j) {
      p[shift + static_cast<std::size_t>(j)] -= c * Rat(phi.coeffs[j]);
    }
  }
  QVec out(deg);
  for (Index j = 0; j < deg; ++j) out[j] = p[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

CycNum cyc_normalize(const QVec& raw, long order) {
  std::vector<Rat> p(static_cast<std::size_t>(raw.size()));
  for (Index i = 0; i < raw.size(); ++i) p[static_cast<std::size_t>(i)] = raw[i];
  CycNum out = CycNum::zero(order);
  out.coeffs_ = reduce_mod_phi(std::move(p), order);
  return out;
}

CycNum CycNum::zero(long order) {
  if (order < 1) throw InputError("order must be positive");
  long deg = cyclotomic_polynomial(order).degree();
  CycNum n;
  n.order_ = order;
  n.coeffs_ = QVec::Constant(deg, Rat(0));
  return n;
}

CycNum CycNum::one(long order) { return from_rat(Rat(1), order); }

CycNum CycNum::from_rat(const Rat& r, long order) {
  CycNum n = zero(order);
  n.coeffs_[0] = r;
  return n;
}

CycNum CycNum::root_power(long order, const Int& k) {
  Int e = k % Int(order);
  if (e.sign() < 0) e += Int(order);
  long ei = e.to_long();
  std::vector<Rat> p(static_cast<std::size_t>(ei) + 1, Rat(0));
  p[static_cast<std::size_t>(ei)] = Rat(1);
  CycNum n = zero(order);
  n.coeffs_ = reduce_mod_phi(std::move(p), order);
  return n;
}

bool CycNum::is_zero() const {
  for (Index i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (Index i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rat CycNum::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic number is not rational");
  return coeffs_[0];
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ != b.order_) throw Error("incompatible orders");
  for (Index i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum n = *this;
  for (Index i = 0; i < n.coeffs_.size(); ++i) n.coeffs_[i] = -n.coeffs_[i];
  return n;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.order_ != b.order_) throw Error("incompatible orders");
  CycNum n = a;
  for (Index i = 0; i < n.coeffs_.size(); ++i) n.coeffs_[i] += b.coeffs_[i];
  return n;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  if (a.order_ != b.order_) throw Error("incompatible orders");
  CycNum n = a;
  for (Index i = 0; i < n.coeffs_.size(); ++i) n.coeffs_[i] -= b.coeffs_[i];
  return n;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.order_ != b.order_) throw Error("incompatible orders");
  const Index da = a.coeffs_.size(), db = b.coeffs_.size();
  std::vector<Rat> conv(static_cast<std::size_t>(da + db - 1), Rat(0));
  for (Index i = 0; i < da; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (Index j = 0; j < db; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      conv[static_cast<std::size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycNum n = CycNum::zero(a.order_);
  n.coeffs_ = reduce_mod_phi(std::move(conv), a.order_);
  return n;
}

CycNum operator*(const CycNum& a, const Rat& s) {
  CycNum n = a;
  for (Index i = 0; i < n.coeffs_.size(); ++i) n.coeffs_[i] *= s;
  return n;
}

namespace {

// Rational dense polynomials for the extended Euclid used by cyc_inverse.
using RPoly = std::vector<Rat>;

void rprune(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool rzero(const RPoly& p) { return p.empty(); }

RPoly rsub_scaled(RPoly a, const RPoly& b, const Rat& c, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  rprune(a);
  return a;
}

// Divides a by b, returning (quotient, remainder).
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
  rprune(a);
  if (rzero(b)) throw Error("division by zero");
  RPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (!rzero(a) && a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    a = rsub_scaled(std::move(a), b, c, shift);
  }
  return {q, a};
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  if (rzero(a) || rzero(b)) return {};
  RPoly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rprune(a);
  return a;
}

}  // namespace

CycNum cyc_inverse(const CycNum& a) {
  if (a.is_zero()) throw Error("division by zero");
  const CycPoly& phi = cyclotomic_polynomial(a.order());

  RPoly r0, r1, s0{Rat(1)}, s1{};
  r0.reserve(static_cast<std::size_t>(a.coeffs().size()));
  for (Index i = 0; i < a.coeffs().size(); ++i) r0.push_back(a.coeffs()[i]);
  rprune(r0);
  r1.reserve(static_cast<std::size_t>(phi.coeffs.size()));
  for (Index i = 0; i < phi.coeffs.size(); ++i) r1.push_back(Rat(phi.coeffs[i]));

  // Invariant: s_i * a == r_i (mod Phi). Phi is irreducible over Q, so the
  // loop ends with a constant gcd.
  while (!rzero(r1)) {
    auto [q, r] = rdivmod(r0, r1);
    RPoly s = rsub(s0, rmul(q, s1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error("inverse failed: non-constant gcd with cyclotomic polynomial");
  Rat c = r0[0];
  QVec raw(static_cast<Index>(s0.size()));
  for (std::size_t i = 0; i < s0.size(); ++i) raw[static_cast<Index>(i)] = s0[i] / c;
  return cyc_normalize(raw, a.order());
}

CycNum cyc_embed(const CycNum& a, long new_order) {
  if (new_order < 1) throw InputError("order must be positive");
  if (new_order % a.order() != 0) throw Error("incompatible orders");
  long stride = new_order / a.order();
  std::vector<Rat> p(static_cast<std::size_t>(a.coeffs().size() - 1) * stride + 1, Rat(0));
  for (Index i = 0; i < a.coeffs().size(); ++i)
    p[static_cast<std::size_t>(i) * static_cast<std::size_t>(stride)] = a.coeffs()[i];
  CycNum out = CycNum::zero(new_order);
  QVec raw(static_cast<Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) raw[static_cast<Index>(i)] = p[i];
  return cyc_normalize(raw, new_order);
}

}  // namespace polyexp
