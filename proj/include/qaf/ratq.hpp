#pragma once
// Exact scalars: the field Q(q), elements kept in a canonical normal form so
// that equality is syntactic.  A value is  c * q^e * A(q)/B(q)  with
//   c   rational (carries sign and content),
//   A,B primitive integer polynomials, nonzero constant term, positive
//       leading coefficient, gcd(A,B) = 1.
// Zero is (c=0, e=0, A=B=1).

#include <gmpxx.h>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaf {

// dense integer polynomial in q; c[k] is the coefficient of q^k; no trailing zeros
struct ZPoly {
  std::vector<mpz_class> c;

  ZPoly() = default;
  explicit ZPoly(long v) { if (v) c = {mpz_class(v)}; }
  explicit ZPoly(const mpz_class& v) { if (v != 0) c = {v}; }

  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }  // -1 for zero
  int low() const;                               // lowest nonzero exponent (0 if zero)
  void trim();

  friend ZPoly operator+(const ZPoly&, const ZPoly&);
  friend ZPoly operator-(const ZPoly&, const ZPoly&);
  friend ZPoly operator*(const ZPoly&, const ZPoly&);
  ZPoly operator-() const;
  bool operator==(const ZPoly& o) const { return c == o.c; }

  mpz_class content() const;  // >= 0; gcd of coefficients
  ZPoly primitive() const;    // divide by content (zero stays zero)
  mpz_class eval1() const;    // value at q = 1
};

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);       // primitive, positive leading coeff
ZPoly zp_divexact(const ZPoly& a, const ZPoly& g);  // a/g, must be exact

class RatQ {
 public:
  RatQ() : c_(0), e_(0), A_(1L), B_(1L) {}  // zero
  static RatQ zero() { return RatQ(); }
  static RatQ one() { return integer(1); }
  static RatQ integer(long v);
  static RatQ rational(const mpq_class& v);
  static RatQ rational(long num, long den);
  static RatQ q_pow(long e);                 // q^e
  static RatQ monomial(const mpq_class& coef, long e);
  static RatQ qint(long l);                  // [l]_q
  static RatQ qint_base(long l, long r);     // [l]_{q^r}
  // general constructor, normalizes
  RatQ(const mpq_class& c, long e, ZPoly A, ZPoly B);

  bool is_zero() const { return c_ == 0; }
  bool is_one() const;

  friend RatQ operator+(const RatQ&, const RatQ&);
  friend RatQ operator-(const RatQ&, const RatQ&);
  friend RatQ operator*(const RatQ&, const RatQ&);
  friend RatQ operator/(const RatQ&, const RatQ&);
  RatQ operator-() const;
  RatQ& operator+=(const RatQ& o) { *this = *this + o; return *this; }
  RatQ& operator-=(const RatQ& o) { *this = *this - o; return *this; }
  RatQ& operator*=(const RatQ& o) { *this = *this * o; return *this; }
  RatQ& operator/=(const RatQ& o) { *this = *this / o; return *this; }

  RatQ inv() const;
  RatQ pow(long k) const;
  RatQ subst_qinv() const;  // q -> q^{-1} (bar involution), handy in tests

  bool operator==(const RatQ& o) const {
    return c_ == o.c_ && e_ == o.e_ && A_ == o.A_ && B_ == o.B_;
  }
  bool operator!=(const RatQ& o) const { return !(*this == o); }
  bool operator<(const RatQ& o) const;  // arbitrary total order (for map keys)

  // true iff the value is c*q^e with no polynomial part; used to read back
  // spectral points
  bool as_monomial(mpq_class& coef, long& e) const;

  mpq_class eval1() const;  // value at q = 1 (throws if pole)

  std::string str() const;  // canonical text, e.g. "q^2+1+q^-2"

  const mpq_class& coef() const { return c_; }
  long shift() const { return e_; }
  const ZPoly& num() const { return A_; }
  const ZPoly& den() const { return B_; }

 private:
  mpq_class c_;
  long e_;
  ZPoly A_, B_;
  void normalize();
};

std::string zpoly_str(const ZPoly& p);  // debug

}  // namespace qaf
