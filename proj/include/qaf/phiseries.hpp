#pragma once
// Diagonal eigenvalue series of the commuting loop-Cartan operators: a
// rational function of z kept in factored form
//   pref * prod_p (1 - z * value(p))^{mult_p}
// where each point p is a spectral token times an integer power of u.  The
// same object yields both expansions: around z = 0 (the + series) and around
// z = infinity (the - series), as well as the induced mode families.

#include "qaf/exppoly.hpp"
#include "qaf/monomial.hpp"
#include "qaf/ratqu.hpp"

#include <map>
#include <string>
#include <vector>

namespace qaf {

struct UPoint {
  Spectral p;
  long uexp = 0;

  UPoint() = default;
  UPoint(const Spectral& s, long e) : p(s), uexp(e) {}
  RatQU value() const { return RatQU(p.value()) * RatQU::u_pow(uexp); }
  RatQ qvalue() const { return p.value(); }
  auto operator<=>(const UPoint&) const = default;
  std::string str() const;
};

class PhiSeries {
 public:
  PhiSeries() : pref_(RatQU::one()) {}
  explicit PhiSeries(const RatQU& pref) : pref_(pref) {}

  const RatQU& pref() const { return pref_; }
  const std::map<UPoint, int>& factors() const { return fac_; }

  void mul_pref(const RatQU& c) { pref_ *= c; }
  void add_factor(const UPoint& pt, int mult);

  // degree balance: sum of factor multiplicities (numerator minus denominator)
  int balance() const;

  PhiSeries operator*(const PhiSeries& o) const;
  bool operator==(const PhiSeries& o) const { return pref_ == o.pref_ && fac_ == o.fac_; }
  bool operator<(const PhiSeries& o) const;

  // substitute z -> u^rho * z
  PhiSeries shift_z_u(long rho) const;
  // evaluate coefficients at u = 1, merging factor points (throws if the
  // prefactor has a pole there)
  PhiSeries specialize_u1() const;
  // true when no factor point and no prefactor involves u
  bool u_free() const;

  // Taylor coefficient of z^m at z = 0 (m >= 0)
  RatQU coef_plus(long m) const;
  // coefficient of z^-m in the expansion at z = infinity (m >= 0);
  // requires balance() == 0
  RatQU coef_minus(long m) const;

  // the factor orders per spectral point, for u-free series
  std::map<Spectral, int> orders_u1() const;

  std::string str() const;

 private:
  RatQU pref_;
  std::map<UPoint, int> fac_;
};

// the l-weight data of a u-free diagonal profile: weight plus per-node orders
LWeight lweight_of_profiles(const CartanData& cd, const WeightVector& wt,
                            const std::vector<PhiSeries>& per_node);

// mode family of the + series (modes m >= 1) of a list of diagonal series:
// diagonal matrices, signatures read off the denominator factors, components
// separated by exact sampling and verified on extra modes
ExpPolyFamily plus_family(const std::vector<PhiSeries>& diag);
// mode family F with F(m) = phi^-_{-m} (modes m >= 1)
ExpPolyFamily minus_family(const std::vector<PhiSeries>& diag);

}  // namespace qaf
