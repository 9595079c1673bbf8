#include "qaf/ratqu.hpp"

#include <algorithm>
#include <climits>

namespace qaf {

void up_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), RatQ::zero());
  for (size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] += b[k];
  }
  up_trim(r);
  return r;
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), RatQ::zero());
  for (size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] -= b[k];
  }
  up_trim(r);
  return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, RatQ::zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  up_trim(r);
  return r;
}

UPoly up_rem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    RatQ f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    a.pop_back();
    up_trim(a);
  }
  return a;
}

namespace {

// clear the q-denominators of every coefficient so that subsequent ring
// operations never reduce fractions (B == 1 coefficients add and multiply
// without polynomial gcds)
void up_make_integral(UPoly& p) {
  std::vector<ZPoly> dens;
  for (const auto& x : p) {
    if (x.is_zero() || x.den().deg() < 1) continue;
    bool seen = false;
    for (const auto& d : dens)
      if (d == x.den()) { seen = true; break; }
    if (!seen) dens.push_back(x.den());
  }
  for (const auto& d : dens) {
    RatQ m(mpq_class(1), 0, d, ZPoly(1L));
    for (auto& x : p) x *= m;
  }
}

// divide out the common content (rational, q-power, and polynomial) of an
// integral polynomial; keeps pseudo-remainder coefficients small
void up_strip_content(UPoly& p) {
  up_trim(p);
  if (p.empty()) return;
  ZPoly g;
  long emin = 0;
  mpz_class cnum = 0, cden = 1;
  bool first = true;
  bool g_settled = false;  // poly gcd chain hit a constant, stop updating
  for (const auto& x : p) {
    if (x.is_zero()) continue;
    if (!g_settled) {
      g = zp_gcd(g, x.num());
      g_settled = g.deg() == 0;
    }
    if (first || x.shift() < emin) emin = x.shift();
    mpz_gcd(cnum.get_mpz_t(), cnum.get_mpz_t(), x.coef().get_num_mpz_t());
    mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), x.coef().get_den_mpz_t());
    first = false;
  }
  mpq_class cont(cnum, cden);
  cont.canonicalize();
  bool poly = g.deg() >= 1;
  if (!poly && cont == 1 && emin == 0) return;
  for (auto& x : p) {
    if (x.is_zero()) continue;
    x = RatQ(x.coef() / cont, x.shift() - emin, poly ? zp_divexact(x.num(), g) : x.num(),
             ZPoly(1L));
  }
}

// specialize at q = 2; false when a coefficient denominator vanishes there
bool rq_eval2(const RatQ& x, mpq_class& out) {
  auto horner2 = [](const ZPoly& p) {
    mpz_class v = 0;
    for (size_t k = p.c.size(); k-- > 0;) v = v * 2 + p.c[k];
    return v;
  };
  mpz_class den = horner2(x.den());
  if (den == 0) return false;
  out = x.coef() * mpq_class(horner2(x.num())) / mpq_class(den);
  if (x.shift() >= 0) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, (unsigned long)x.shift());
    out *= mpq_class(p2);
  } else {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, (unsigned long)(-x.shift()));
    out /= mpq_class(p2);
  }
  return true;
}

// degree of gcd(N, D) after the q -> 2 specialization, or -1 when the probe
// is unusable (a denominator vanishes, or a leading coefficient dies and the
// degree would drop).  A nontrivial true gcd keeps its degree under any
// defined specialization, so a result of 0 proves coprimality.
int spec_gcd_deg(const UPoly& N, const UPoly& D) {
  using QU = std::vector<mpq_class>;
  auto lift = [](const UPoly& p, QU& out) {
    out.assign(p.size(), mpq_class(0));
    for (size_t k = 0; k < p.size(); ++k)
      if (!p[k].is_zero() && !rq_eval2(p[k], out[k])) return false;
    return true;
  };
  QU n, d;
  if (!lift(N, n) || !lift(D, d)) return -1;
  if (n.empty() || d.empty() || n.back() == 0 || d.back() == 0) return -1;
  while (!d.empty()) {
    // remainder of n by d over Q
    while (n.size() >= d.size() && !n.empty()) {
      mpq_class f = n.back() / d.back();
      size_t off = n.size() - d.size();
      for (size_t k = 0; k < d.size(); ++k) n[off + k] -= f * d[k];
      n.pop_back();
      while (!n.empty() && n.back() == 0) n.pop_back();
    }
    std::swap(n, d);
  }
  return n.empty() ? -1 : (int)n.size() - 1;
}

// pseudo-remainder of integral polynomials: scale by the leading coefficient
// instead of dividing, so every intermediate stays integral
UPoly up_prem(UPoly a, const UPoly& b) {
  const RatQ& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    RatQ top = a.back();
    size_t off = a.size() - b.size();
    for (auto& x : a) x *= lead;
    for (size_t k = 0; k < b.size(); ++k) a[off + k] -= top * b[k];
    a.pop_back();
    up_trim(a);
  }
  return a;
}

}  // namespace

UPoly up_gcd(UPoly a, UPoly b) {
  up_trim(a);
  up_trim(b);
  if (a.empty() || b.empty()) {
    UPoly r = a.empty() ? std::move(b) : std::move(a);
    if (!r.empty()) {
      RatQ lead = r.back();
      for (auto& x : r) x /= lead;
    }
    return r;
  }
  // primitive pseudo-remainder sequence over integral coefficients: the
  // fraction-field Euclid swells both the q-degrees and the inner integer
  // gcd chains, while content stripping keeps every step near-minimal
  up_make_integral(a);
  up_make_integral(b);
  up_strip_content(a);
  up_strip_content(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = up_prem(a, b);
    up_strip_content(r);
    a = std::move(b);
    b = std::move(r);
  }
  RatQ lead = a.back();
  for (auto& x : a) x /= lead;
  return a;
}

RatQ up_eval(const UPoly& p, const RatQ& x) {
  RatQ r = RatQ::zero();
  for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

long up_val_u1(const UPoly& p) {
  if (p.empty()) throw std::logic_error("up_val_u1: zero polynomial");
  UPoly cur = p;
  long v = 0;
  while (true) {
    RatQ s = RatQ::zero();
    for (const auto& c : cur) s += c;
    if (!s.is_zero()) return v;
    cur = up_div_u_minus_1(cur);
    ++v;
  }
}

UPoly up_div_u_minus_1(const UPoly& p) {
  // synthetic division by (u - 1); remainder must be 0
  if (p.empty()) return {};
  UPoly q(p.size() - 1, RatQ::zero());
  RatQ carry = RatQ::zero();
  for (size_t k = p.size(); k-- > 1;) {
    carry = carry + p[k];
    q[k - 1] = carry;
  }
  up_trim(q);
  return q;
}

UPoly up_taylor_u1(const UPoly& p, int n) {
  // p(1+t) truncated at t^n
  UPoly out(1, RatQ::zero());
  out.reserve((size_t)n + 1);
  // Horner: result = ((c_d)(1+t) + c_{d-1})(1+t) + ...
  UPoly acc;  // polynomial in t
  for (size_t k = p.size(); k-- > 0;) {
    // acc = acc*(1+t) + c_k  (truncate at t^n)
    UPoly next(std::min(acc.size() + 1, (size_t)n + 1), RatQ::zero());
    for (size_t j = 0; j < acc.size(); ++j) {
      if ((size_t)j < next.size()) next[j] += acc[j];
      if (j + 1 < next.size()) next[j + 1] += acc[j];
    }
    if (next.empty()) next.resize(1, RatQ::zero());
    next[0] += p[k];
    acc = std::move(next);
  }
  acc.resize((size_t)n + 1, RatQ::zero());
  return acc;
}

// ---------------------------------------------------------------------------

RatQU::RatQU(const RatQ& c) {
  if (!c.is_zero()) N_ = {c};
  D_ = {RatQ::one()};
}

RatQU RatQU::u_pow(long k) {
  RatQU r;
  if (k >= 0) {
    r.N_.assign((size_t)k + 1, RatQ::zero());
    r.N_.back() = RatQ::one();
    r.D_ = {RatQ::one()};
  } else {
    r.N_ = {RatQ::one()};
    r.D_.assign((size_t)(-k) + 1, RatQ::zero());
    r.D_.back() = RatQ::one();
  }
  return r;
}

RatQU RatQU::from_coeffs(UPoly num, UPoly den) {
  RatQU r;
  r.N_ = std::move(num);
  r.D_ = std::move(den);
  r.normalize();
  return r;
}

void RatQU::normalize() {
  up_trim(N_);
  up_trim(D_);
  if (D_.empty()) throw std::domain_error("RatQU: division by zero");
  if (N_.empty()) {
    D_ = {RatQ::one()};
    return;
  }
  // against a degree-0 side the gcd is constant and nothing would divide
  if (N_.size() <= 1 || D_.size() <= 1) {
    RatQ lead0 = D_.back();
    if (!lead0.is_one()) {
      for (auto& x : D_) x /= lead0;
      for (auto& x : N_) x /= lead0;
    }
    return;
  }
  // cheap coprimality proof: a surviving specialization with constant gcd
  // rules out any common factor, skipping all exact gcd work
  if (spec_gcd_deg(N_, D_) == 0) {
    RatQ leadp = D_.back();
    if (!leadp.is_one()) {
      for (auto& x : D_) x /= leadp;
      for (auto& x : N_) x /= leadp;
    }
    return;
  }
  // a linear denominator divides the numerator iff its root annihilates it;
  // one Horner pass decides, one synthetic division cancels
  if (D_.size() == 2) {
    RatQ u0 = -(D_[0] / D_[1]);
    RatQ val = N_.back();
    for (size_t k = N_.size() - 1; k-- > 0;) val = val * u0 + N_[k];
    if (val.is_zero()) {
      UPoly quot(N_.size() - 1, RatQ::zero());
      RatQ carry = RatQ::zero();
      for (size_t k = N_.size(); k-- > 1;) {
        carry = N_[k] + u0 * carry;
        quot[k - 1] = carry;
      }
      N_ = std::move(quot);
      up_trim(N_);
      D_ = {D_[1]};
    }
    RatQ lead1 = D_.back();
    if (!lead1.is_one()) {
      for (auto& x : D_) x /= lead1;
      for (auto& x : N_) x /= lead1;
    }
    return;
  }
  UPoly g = up_gcd(N_, D_);
  if (g.size() > 1) {
    // divide exactly
    auto divex = [](const UPoly& a, const UPoly& b) {
      UPoly rem = a, quot(a.size() - b.size() + 1, RatQ::zero());
      while (rem.size() >= b.size() && !rem.empty()) {
        RatQ f = rem.back() / b.back();
        size_t off = rem.size() - b.size();
        quot[off] = f;
        for (size_t k = 0; k < b.size(); ++k) rem[off + k] -= f * b[k];
        rem.pop_back();
        up_trim(rem);
      }
      if (!rem.empty()) throw std::logic_error("RatQU: inexact division");
      up_trim(quot);
      return quot;
    };
    N_ = divex(N_, g);
    D_ = divex(D_, g);
  }
  RatQ lead = D_.back();
  if (!lead.is_one()) {
    for (auto& x : D_) x /= lead;
    for (auto& x : N_) x /= lead;
  }
}

bool RatQU::is_one() const {
  return N_.size() == 1 && N_[0].is_one() && D_.size() == 1 && D_[0].is_one();
}

RatQU operator+(const RatQU& a, const RatQU& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatQU r;
  if (a.D_ == b.D_) {
    r.N_ = up_add(a.N_, b.N_);
    r.D_ = a.D_;
  } else {
    r.N_ = up_add(up_mul(a.N_, b.D_), up_mul(b.N_, a.D_));
    r.D_ = up_mul(a.D_, b.D_);
  }
  r.normalize();
  return r;
}

RatQU operator-(const RatQU& a, const RatQU& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  RatQU r;
  if (a.D_ == b.D_) {
    r.N_ = up_sub(a.N_, b.N_);
    r.D_ = a.D_;
  } else {
    r.N_ = up_sub(up_mul(a.N_, b.D_), up_mul(b.N_, a.D_));
    r.D_ = up_mul(a.D_, b.D_);
  }
  r.normalize();
  return r;
}

RatQU operator*(const RatQU& a, const RatQU& b) {
  if (a.is_zero() || b.is_zero()) return RatQU::zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  RatQU r;
  r.N_ = up_mul(a.N_, b.N_);
  r.D_ = up_mul(a.D_, b.D_);
  r.normalize();
  return r;
}

RatQU operator/(const RatQU& a, const RatQU& b) { return a * b.inv(); }

RatQU RatQU::operator-() const {
  RatQU r = *this;
  for (auto& x : r.N_) x = -x;
  return r;
}

RatQU RatQU::inv() const {
  if (is_zero()) throw std::domain_error("RatQU: inverse of zero");
  RatQU r;
  r.N_ = D_;
  r.D_ = N_;
  r.normalize();
  return r;
}

RatQU RatQU::pow(long k) const {
  if (k == 0) return one();
  RatQU base = k > 0 ? *this : inv();
  unsigned long n = (unsigned long)(k > 0 ? k : -k);
  RatQU r = one();
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool RatQU::operator<(const RatQU& o) const {
  auto cmp_poly = [](const UPoly& x, const UPoly& y) -> int {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t k = 0; k < x.size(); ++k) {
      if (x[k] < y[k]) return -1;
      if (y[k] < x[k]) return 1;
    }
    return 0;
  };
  int s = cmp_poly(N_, o.N_);
  if (s) return s < 0;
  return cmp_poly(D_, o.D_) < 0;
}

long RatQU::u1_valuation() const {
  if (is_zero()) return LONG_MAX;
  return up_val_u1(N_) - up_val_u1(D_);
}

bool RatQU::in_A() const { return u1_valuation() >= 0; }
bool RatQU::unit_in_A() const { return !is_zero() && u1_valuation() == 0; }

RatQ RatQU::eval_u1() const {
  if (is_zero()) return RatQ::zero();
  if (up_val_u1(D_) > 0) throw std::domain_error("RatQU: pole at u=1");
  RatQ n = up_eval(N_, RatQ::one());
  RatQ d = up_eval(D_, RatQ::one());
  return n / d;
}

RatQ RatQU::eval(const RatQ& x) const {
  RatQ d = up_eval(D_, x);
  if (d.is_zero()) throw std::domain_error("RatQU: pole at substitution point");
  return up_eval(N_, x) / d;
}

std::vector<RatQ> RatQU::taylor_u1(int n) const {
  if (is_zero()) return std::vector<RatQ>((size_t)n + 1, RatQ::zero());
  if (up_val_u1(D_) > 0) throw std::domain_error("RatQU: not regular at u=1");
  UPoly num = up_taylor_u1(N_, n), den = up_taylor_u1(D_, n);
  // series division
  std::vector<RatQ> out((size_t)n + 1, RatQ::zero());
  RatQ d0 = den[0];
  for (int k = 0; k <= n; ++k) {
    RatQ s = k < (int)num.size() ? num[(size_t)k] : RatQ::zero();
    for (int j = 1; j <= k; ++j) s -= den[(size_t)j] * out[(size_t)(k - j)];
    out[(size_t)k] = s / d0;
  }
  return out;
}

std::optional<RatQ> RatQU::as_constant() const {
  if (is_zero()) return RatQ::zero();
  if (N_.size() == 1 && D_.size() == 1) return N_[0] / D_[0];
  return std::nullopt;
}

namespace {

// render one term c*u^k of a u-polynomial
std::string uterm_str(const RatQ& c, size_t k, bool& neg_out) {
  // pull a leading sign out when the coefficient is a single Laurent term
  mpq_class mc;
  long me;
  std::string body;
  bool neg = false;
  RatQ cc = c;
  if (cc.as_monomial(mc, me)) {
    if (mc < 0) { neg = true; cc = -cc; cc.as_monomial(mc, me); }
    std::string cs = cc.str();
    if (k == 0) body = cs;
    else {
      body = (cc.is_one() ? "" : cs + "*");
      body += "u";
      if (k != 1) body += "^" + std::to_string(k);
    }
  } else {
    std::string cs = c.str();
    if (k == 0) body = cs;
    else body = "(" + cs + ")*u" + (k != 1 ? "^" + std::to_string(k) : "");
  }
  neg_out = neg;
  return body;
}

std::string upoly_str(const UPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    bool neg = false;
    std::string t = uterm_str(p[k], k, neg);
    if (out.empty()) out = (neg ? "-" : "") + t;
    else out += (neg ? "-" : "+") + t;
  }
  return out;
}

}  // namespace

std::string RatQU::str() const {
  if (is_zero()) return "0";
  if (D_.size() == 1 && D_[0].is_one()) return upoly_str(N_);
  return "(" + upoly_str(N_) + ")/(" + upoly_str(D_) + ")";
}

}  // namespace qaf
