#pragma once
// Q(q)(u): rational functions in u with RatQ coefficients.  Canonical form:
// denominator monic, gcd(num, den) = 1.  The local ring A of functions
// regular at u = 1 is queried through the (u-1)-adic valuation.

#include "qaf/ratq.hpp"

#include <optional>

namespace qaf {

using UPoly = std::vector<RatQ>;  // dense in u, no trailing zeros

UPoly up_add(const UPoly&, const UPoly&);
UPoly up_sub(const UPoly&, const UPoly&);
UPoly up_mul(const UPoly&, const UPoly&);
UPoly up_rem(UPoly a, const UPoly& b);
UPoly up_gcd(UPoly a, UPoly b);  // monic
void  up_trim(UPoly&);
RatQ  up_eval(const UPoly&, const RatQ& x);
long  up_val_u1(const UPoly&);            // multiplicity of root u=1 (poly must be nonzero)
UPoly up_div_u_minus_1(const UPoly&);     // exact division by (u-1)
UPoly up_taylor_u1(const UPoly&, int n);  // coefficients in t = u-1, up to t^n

class RatQU {
 public:
  RatQU() : N_(), D_{RatQ::one()} {}  // zero
  RatQU(const RatQ& c);               // constant
  static RatQU zero() { return RatQU(); }
  static RatQU one() { return RatQU(RatQ::one()); }
  static RatQU integer(long v) { return RatQU(RatQ::integer(v)); }
  static RatQU u_pow(long k);  // u^k, any sign
  static RatQU from_coeffs(UPoly num, UPoly den);

  bool is_zero() const { return N_.empty(); }
  bool is_one() const;

  friend RatQU operator+(const RatQU&, const RatQU&);
  friend RatQU operator-(const RatQU&, const RatQU&);
  friend RatQU operator*(const RatQU&, const RatQU&);
  friend RatQU operator/(const RatQU&, const RatQU&);
  RatQU operator-() const;
  RatQU& operator+=(const RatQU& o) { *this = *this + o; return *this; }
  RatQU& operator-=(const RatQU& o) { *this = *this - o; return *this; }
  RatQU& operator*=(const RatQU& o) { *this = *this * o; return *this; }
  RatQU& operator/=(const RatQU& o) { *this = *this / o; return *this; }

  RatQU inv() const;
  RatQU pow(long k) const;

  bool operator==(const RatQU& o) const { return N_ == o.N_ && D_ == o.D_; }
  bool operator!=(const RatQU& o) const { return !(*this == o); }
  bool operator<(const RatQU&) const;  // total order for map keys

  // (u-1)-adic valuation; LONG_MAX for zero
  long u1_valuation() const;
  bool in_A() const;       // valuation >= 0
  bool unit_in_A() const;  // valuation == 0

  RatQ eval_u1() const;               // value at u=1 (throws if valuation < 0)
  RatQ eval(const RatQ& x) const;     // substitute u = x
  std::vector<RatQ> taylor_u1(int n) const;  // in t = u-1 (throws if not in A)

  std::optional<RatQ> as_constant() const;  // constant in u?

  std::string str() const;

  const UPoly& num() const { return N_; }
  const UPoly& den() const { return D_; }

 private:
  UPoly N_, D_;
  void normalize();
};

}  // namespace qaf
