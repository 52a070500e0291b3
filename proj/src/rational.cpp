#include "polyexp/rational.hpp"

#include <cctype>
#include <ostream>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Int Int::parse(std::string_view text) {
  if (!is_integer_literal(text)) {
    if (text.find('.') != std::string_view::npos ||
        text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
      throw InputError("floats forbidden; write an exact integer: '" + std::string(text) + "'");
    }
    throw InputError("not an integer literal: '" + std::string(text) + "'");
  }
  return Int(mpz_class(std::string(text), 10));
}

long Int::to_long() const {
  if (!v_.fits_slong_p()) throw Error("integer too large for machine word: " + str());
  return v_.get_si();
}

Int abs(const Int& a) { return Int(mpz_class(::abs(a.raw()))); }

Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(g);
}

Int lcm(const Int& a, const Int& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(l);
}

Int exgcd(const Int& a, const Int& b, Int& x, Int& y) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.raw().get_mpz_t(),
             b.raw().get_mpz_t());
  x = Int(s);
  y = Int(t);
  return Int(g);
}

Int floordiv(const Int& a, const Int& b) {
  if (b.is_zero()) throw Error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(q);
}

Int divexact(const Int& a, const Int& b) {
  if (b.is_zero()) throw Error("division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  if (sgn(r) != 0) throw Error("non-exact integer division");
  return Int(q);
}

Int pow(const Int& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
  return Int(r);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.raw(); }

Rat::Rat(const Int& num, const Int& den) {
  if (den.is_zero()) throw Error("division by zero");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    if (text.find('.') != std::string_view::npos ||
        text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
      throw InputError("floats forbidden; write 1/2 style rationals: '" + std::string(text) + "'");
    }
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  Int n = Int::parse(num);
  if (slash == std::string_view::npos) return Rat(n);
  Int d = Int::parse(den);
  if (d.is_zero()) throw InputError("zero denominator: '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.raw()))); }

Int floor(const Rat& a) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
  return Int(q);
}

Int ceil(const Rat& a) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
  return Int(q);
}

Int round_nearest(const Rat& a) {
  // floor(a + 1/2): halves go up.
  return floor(a + Rat(1, 2));
}

Rat mod1(const Rat& a) {
  Rat r = a - Rat(floor(a));
  return r;
}

Rat pow(const Rat& base, const Int& e) {
  if (e.is_zero()) return Rat(1);
  bool neg = e.sign() < 0;
  if (neg && base.is_zero()) throw Error("division by zero");
  Int m = abs(e);
  if (!m.fits_long()) throw Error("exponent too large: " + e.str());
  unsigned long ul = static_cast<unsigned long>(m.to_long());
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), ul);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), ul);
  Rat r{Int(num), Int(den)};
  if (neg) return Rat(1) / r;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.raw(); }

}  // namespace polyexp
