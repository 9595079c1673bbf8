#include "qaf/ratq.hpp"

#include <algorithm>
#include <sstream>

namespace qaf {

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int ZPoly::low() const {
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) return (int)k;
  return 0;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); ++k) {
    if (k < a.c.size()) r.c[k] += a.c[k];
    if (k < b.c.size()) r.c[k] += b.c[k];
  }
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); ++k) {
    if (k < a.c.size()) r.c[k] += a.c[k];
    if (k < b.c.size()) r.c[k] -= b.c[k];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive() const {
  mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  ZPoly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

mpz_class ZPoly::eval1() const {
  mpz_class s = 0;
  for (const auto& x : c) s += x;
  return s;
}

namespace {

// gcd degree over F_p (p must not kill either leading coefficient);
// -1 when the probe is unusable
int fp_gcd_deg(const ZPoly& a, const ZPoly& b, unsigned long p) {
  auto lift = [p](const ZPoly& z) {
    std::vector<unsigned long> r(z.c.size());
    for (size_t k = 0; k < z.c.size(); ++k) r[k] = mpz_fdiv_ui(z.c[k].get_mpz_t(), p);
    return r;
  };
  std::vector<unsigned long> x = lift(a), y = lift(b);
  if (x.empty() || y.empty() || x.back() == 0 || y.back() == 0) return -1;
  auto mulmod = [p](unsigned long u, unsigned long v) {
    return (unsigned long)((unsigned __int128)u * v % p);
  };
  auto powmod = [&](unsigned long base, unsigned long e) {
    unsigned long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return r;
  };
  while (!y.empty()) {
    unsigned long linv = powmod(y.back(), p - 2);
    while (x.size() >= y.size() && !x.empty()) {
      unsigned long f = mulmod(x.back(), linv);
      size_t off = x.size() - y.size();
      for (size_t k = 0; k < y.size(); ++k)
        x[off + k] = (x[off + k] + p - mulmod(f, y[k])) % p;
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.size() < y.size()) break;
    }
    std::swap(x, y);
  }
  return x.empty() ? -1 : (int)x.size() - 1;
}

// pseudo-remainder over Z: scale by the leading coefficient instead of
// dividing so everything stays integral
ZPoly zp_prem(ZPoly a, const ZPoly& b) {
  while (a.c.size() >= b.c.size() && !a.is_zero()) {
    mpz_class top = a.c.back();
    size_t off = a.c.size() - b.c.size();
    for (auto& x : a.c) x *= b.c.back();
    for (size_t k = 0; k < b.c.size(); ++k)
      mpz_submul(a.c[off + k].get_mpz_t(), top.get_mpz_t(), b.c[k].get_mpz_t());
    a.c.pop_back();
    a.trim();
  }
  return a;
}

}  // namespace

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  ZPoly A = a.primitive(), B = b.primitive();
  if (A.c.back() < 0) A = -A;
  if (B.c.back() < 0) B = -B;
  if (A.deg() == 0 || B.deg() == 0) return ZPoly(1L);
  // a coprime pair modulo a good prime is coprime over Q
  for (unsigned long p : {2147483647ul, 2147483629ul}) {
    int d = fp_gcd_deg(A, B, p);
    if (d == 0) return ZPoly(1L);
    if (d > 0) break;
  }
  // primitive pseudo-remainder sequence over Z
  if (A.deg() < B.deg()) std::swap(A, B);
  while (!B.is_zero() && B.deg() > 0) {
    ZPoly R = zp_prem(A, B).primitive();
    A = std::move(B);
    B = std::move(R);
  }
  if (!B.is_zero()) return ZPoly(1L);  // ended on a nonzero constant
  if (A.c.back() < 0) A = -A;
  return A;
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& g) {
  if (a.is_zero()) return ZPoly();
  ZPoly rem = a;
  ZPoly quot;
  quot.c.assign(a.c.size() - g.c.size() + 1, mpz_class(0));
  mpz_class f, r0;
  while (rem.c.size() >= g.c.size() && !rem.is_zero()) {
    mpz_tdiv_qr(f.get_mpz_t(), r0.get_mpz_t(), rem.c.back().get_mpz_t(), g.c.back().get_mpz_t());
    if (r0 != 0) throw std::logic_error("zp_divexact: not exact");
    size_t off = rem.c.size() - g.c.size();
    quot.c[off] = f;
    for (size_t k = 0; k < g.c.size(); ++k)
      mpz_submul(rem.c[off + k].get_mpz_t(), f.get_mpz_t(), g.c[k].get_mpz_t());
    rem.c.pop_back();
    rem.trim();
  }
  if (!rem.is_zero()) throw std::logic_error("zp_divexact: not exact");
  quot.trim();
  return quot;
}

// ---------------------------------------------------------------------------

RatQ::RatQ(const mpq_class& c, long e, ZPoly A, ZPoly B) : c_(c), e_(e), A_(std::move(A)), B_(std::move(B)) {
  normalize();
}

void RatQ::normalize() {
  if (B_.is_zero()) throw std::domain_error("RatQ: division by zero");
  if (c_ == 0 || A_.is_zero()) {
    c_ = 0; e_ = 0; A_ = ZPoly(1L); B_ = ZPoly(1L);
    return;
  }
  int la = A_.low(), lb = B_.low();
  if (la) A_.c.erase(A_.c.begin(), A_.c.begin() + la);
  if (lb) B_.c.erase(B_.c.begin(), B_.c.begin() + lb);
  e_ += la - lb;
  mpz_class ca = A_.content(), cb = B_.content();
  if (ca != 1) for (auto& x : A_.c) x /= ca;
  if (cb != 1) for (auto& x : B_.c) x /= cb;
  c_ *= mpq_class(ca) / mpq_class(cb);
  if (A_.c.back() < 0) { A_ = -A_; c_ = -c_; }
  if (B_.c.back() < 0) { B_ = -B_; c_ = -c_; }
  // a degree-0 side makes the gcd constant, so the reduction is a no-op
  if (A_.deg() >= 1 && B_.deg() >= 1) {
    ZPoly g = zp_gcd(A_, B_);
    if (g.deg() >= 1) {
      A_ = zp_divexact(A_, g);
      B_ = zp_divexact(B_, g);
    }
  }
  c_.canonicalize();
}

RatQ RatQ::integer(long v) { return RatQ(mpq_class(v), 0, ZPoly(1L), ZPoly(1L)); }
RatQ RatQ::rational(const mpq_class& v) { return RatQ(v, 0, ZPoly(1L), ZPoly(1L)); }
RatQ RatQ::rational(long num, long den) { return rational(mpq_class(num, den)); }
RatQ RatQ::q_pow(long e) { return RatQ(mpq_class(1), e, ZPoly(1L), ZPoly(1L)); }
RatQ RatQ::monomial(const mpq_class& coef, long e) { return RatQ(coef, e, ZPoly(1L), ZPoly(1L)); }

RatQ RatQ::qint(long l) { return qint_base(l, 1); }

RatQ RatQ::qint_base(long l, long r) {
  if (l == 0) return zero();
  bool neg = l < 0;
  long m = neg ? -l : l;
  ZPoly A;
  A.c.assign((size_t)(2 * r * (m - 1)) + 1, mpz_class(0));
  for (long t = 0; t < m; ++t) A.c[(size_t)(2 * r * t)] = 1;
  RatQ v(mpq_class(neg ? -1 : 1), r * (1 - m), std::move(A), ZPoly(1L));
  return v;
}

bool RatQ::is_one() const {
  return c_ == 1 && e_ == 0 && A_.deg() == 0 && B_.deg() == 0;
}

RatQ operator+(const RatQ& a, const RatQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.e_, b.e_);
  mpz_class da = a.c_.get_den(), db = b.c_.get_den(), L;
  mpz_lcm(L.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  mpz_class pa = a.c_.get_num() * (L / da), pb = b.c_.get_num() * (L / db);
  auto shift = [](const ZPoly& p, long k) {
    if (k == 0 || p.is_zero()) return p;
    ZPoly r;
    r.c.assign(p.c.size() + (size_t)k, mpz_class(0));
    for (size_t t = 0; t < p.c.size(); ++t) r.c[t + (size_t)k] = p.c[t];
    return r;
  };
  ZPoly n1 = shift(a.A_ * b.B_, a.e_ - e), n2 = shift(b.A_ * a.B_, b.e_ - e);
  for (auto& x : n1.c) x *= pa;
  for (auto& x : n2.c) x *= pb;
  ZPoly N = n1 + n2;
  mpq_class cc(1);
  cc /= mpq_class(L);
  return RatQ(cc, e, N, a.B_ * b.B_);
}

RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.c_ = -r.c_;
  return r;
}

RatQ operator*(const RatQ& a, const RatQ& b) {
  if (a.is_zero() || b.is_zero()) return RatQ::zero();
  return RatQ(a.c_ * b.c_, a.e_ + b.e_, a.A_ * b.A_, a.B_ * b.B_);
}

RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inv(); }

RatQ RatQ::inv() const {
  if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
  return RatQ(mpq_class(1) / c_, -e_, B_, A_);
}

RatQ RatQ::pow(long k) const {
  if (k == 0) return one();
  RatQ base = k > 0 ? *this : inv();
  unsigned long n = (unsigned long)(k > 0 ? k : -k);
  RatQ r = one();
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

RatQ RatQ::subst_qinv() const {
  if (is_zero()) return zero();
  auto rev = [](const ZPoly& p) {
    ZPoly r = p;
    std::reverse(r.c.begin(), r.c.end());
    r.trim();
    return r;
  };
  return RatQ(c_, -e_ - A_.deg() + B_.deg(), rev(A_), rev(B_));
}

bool RatQ::operator<(const RatQ& o) const {
  if (e_ != o.e_) return e_ < o.e_;
  int s = cmp(c_, o.c_);
  if (s) return s < 0;
  if (A_.c.size() != o.A_.c.size()) return A_.c.size() < o.A_.c.size();
  for (size_t k = 0; k < A_.c.size(); ++k) {
    int t = cmp(A_.c[k], o.A_.c[k]);
    if (t) return t < 0;
  }
  if (B_.c.size() != o.B_.c.size()) return B_.c.size() < o.B_.c.size();
  for (size_t k = 0; k < B_.c.size(); ++k) {
    int t = cmp(B_.c[k], o.B_.c[k]);
    if (t) return t < 0;
  }
  return false;
}

bool RatQ::as_monomial(mpq_class& coef, long& e) const {
  if (is_zero()) return false;
  if (A_.deg() != 0 || B_.deg() != 0) return false;
  coef = c_;
  e = e_;
  return true;
}

mpq_class RatQ::eval1() const {
  mpz_class d = B_.eval1();
  if (d == 0) throw std::domain_error("RatQ: pole at q=1");
  mpq_class r = c_ * mpq_class(A_.eval1()) / mpq_class(d);
  r.canonicalize();
  return r;
}

namespace {

std::string coef_str(const mpq_class& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// one Laurent term "c*q^e"
std::string term_str(const mpq_class& coef, long e) {
  std::string s;
  mpq_class a = coef;
  bool neg = a < 0;
  if (neg) { s += "-"; a = -a; }
  bool unit = (a == 1);
  if (e == 0) return s + coef_str(a);
  if (!unit) s += coef_str(a) + "*";
  s += "q";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string laurent_str(const mpq_class& c, long e, const ZPoly& A) {
  // terms in decreasing exponent
  std::string out;
  for (int k = A.deg(); k >= 0; --k) {
    if (A.c[(size_t)k] == 0) continue;
    std::string t = term_str(c * mpq_class(A.c[(size_t)k]), e + k);
    if (out.empty()) out = t;
    else if (t[0] == '-') out += t;
    else out += "+" + t;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string RatQ::str() const {
  if (is_zero()) return "0";
  if (B_.deg() == 0) return laurent_str(c_, e_, A_);
  std::string num = laurent_str(c_, e_, A_);
  std::string den = laurent_str(mpq_class(1), 0, B_);
  return "(" + num + ")/(" + den + ")";
}

std::string zpoly_str(const ZPoly& p) { return laurent_str(mpq_class(1), 0, p); }

}  // namespace qaf
