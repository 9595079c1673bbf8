#pragma once
// Families of operators indexed by an integer mode m, with entries of the
// shape  sum_sigma  C_sigma * base^m u^{ue*m} m^k .  Such a family is stored
// by signature sigma = (base, ue, k) with a constant matrix per signature.
// Finitely many signatures means the family satisfies a fixed-length linear
// recurrence in m (its annihilator), so equality of two families follows from
// agreement on enough consecutive modes.

#include "qaf/linalg.hpp"
#include "qaf/ratqu.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qaf {

struct ExpPolySig {
  RatQ base;    // nonzero
  long uexp = 0;  // power of u per unit of m
  int mdeg = 0;   // power of m

  bool operator<(const ExpPolySig& o) const {
    if (uexp != o.uexp) return uexp < o.uexp;
    if (mdeg != o.mdeg) return mdeg < o.mdeg;
    return base < o.base;
  }
  bool operator==(const ExpPolySig& o) const {
    return uexp == o.uexp && mdeg == o.mdeg && base == o.base;
  }
};

// value  base^m * u^(uexp*m) * m^mdeg  at a given mode
RatQU sig_value(const ExpPolySig& s, long m);

class ExpPolyFamily {
 public:
  ExpPolyFamily() = default;
  ExpPolyFamily(int rows, int cols) : r_(rows), c_(cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }

  void add(const ExpPolySig& s, int i, int j, const RatQU& v);
  void add_term(const ExpPolySig& s, const Mat<RatQU>& m);
  void prune();  // drop zero matrices

  Mat<RatQU> eval(long m) const;
  const std::map<ExpPolySig, Mat<RatQU>>& terms() const { return t_; }
  std::vector<ExpPolySig> signatures() const;
  bool is_zero() const;

  ExpPolyFamily operator+(const ExpPolyFamily& o) const;
  ExpPolyFamily operator-(const ExpPolyFamily& o) const;
  ExpPolyFamily scaled(const RatQU& s) const;
  // P * F(m) * Q termwise (basis change)
  ExpPolyFamily conjugated(const Mat<RatQU>& P, const Mat<RatQU>& Q) const;

  bool operator==(const ExpPolyFamily& o) const;

 private:
  int r_ = 0, c_ = 0;
  std::map<ExpPolySig, Mat<RatQU>> t_;
};

// upper bound for the recurrence order of a family with these signatures:
// sum over distinct (base, uexp) of (max mdeg + 1)
int family_order(const ExpPolyFamily& f);

// Sum_{t>=1} x^t t^s  as a rational function of x (x must not be 1);
// equals P_s(x)/(1-x)^{s+1} with P_s the integer Eulerian-type polynomials
// P_0 = X,  P_{s+1} = X * (P_s' * (1-X) + (s+1) P_s).
RatQU tail_sum(const RatQU& x, int s);

// Annihilating recurrence for any family with the given signatures: returns
// coefficients (c_0=1, c_1, ..., c_S) with  sum_t c_t f(m-t) = 0  for all m,
// where S = sum over distinct (base, uexp) of (max mdeg + 1).  Leading and
// trailing coefficients are units at u=1 whenever each base*u^uexp is.
std::vector<RatQU> annihilator_for(const std::vector<ExpPolySig>& sigs);

// Recover the per-signature constant matrices of a family with known
// signature set from samples at consecutive modes m0, m0+1, ...  The
// generalized Vandermonde system is square of size = #sigs.
std::map<ExpPolySig, Mat<RatQU>> separate_components(
    const std::vector<ExpPolySig>& sigs,
    const std::function<Mat<RatQU>(long)>& sample, long m0);

}  // namespace qaf
