#pragma once
// The monomial group underlying q-characters: Laurent monomials in variables
// Y_{i,a} times a Cartan factor k_w.  Spectral parameters a are formal tokens
// (an orbit label plus an integer power of q); w is kept as the weight-space
// coordinate vector of the functional it indexes.

#include "qaf/cartan.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qaf {

struct Spectral {
  int cls = 0;     // orbit label, rendered a, b, c, ...
  long shift = 0;  // power of q on top of the label

  Spectral() = default;
  Spectral(int c, long s) : cls(c), shift(s) {}
  Spectral shifted(long d) const { return Spectral(cls, shift + d); }
  // numeric embedding used whenever an actual scalar is required; distinct
  // labels go to distinct rational points so no accidental collisions occur
  RatQ value() const { return RatQ::monomial(mpq_class(cls + 1), shift); }
  auto operator<=>(const Spectral&) const = default;
  std::string str() const;  // "a", "b*q^2", "a*q^-1"
};

// parse "class:shift" with a numeric class index, e.g. "0:2" -> (0, 2)
Spectral parse_spectral(const std::string& text);

struct Monomial {
  // exponent of Y_{i,a}; entries with exponent zero are absent
  std::map<std::pair<int, Spectral>, int> ye;
  // coordinates of the functional carried by the k factor
  WeightVector omega;

  bool is_identity() const { return ye.empty() && wv_is_zero(omega); }
  int y_exp(int i, const Spectral& a) const;
  // total Y_i exponent, all spectral parameters together
  long y_exp_total(int i) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inv() const;
  Monomial pow(long k) const;
  bool operator==(const Monomial& o) const { return ye == o.ye && omega == o.omega; }
  bool operator<(const Monomial& o) const {
    if (ye != o.ye) return ye < o.ye;
    return omega < o.omega;
  }
};

// constructors
Monomial identity_monomial(const CartanData& cd);
// Y_{i,a}^e together with the k factor of e times the i-th fundamental weight
Monomial y_gen(const CartanData& cd, int i, const Spectral& a, int e);
Monomial k_pure(const CartanData& cd, const WeightVector& w);
// the inverse generalized-root monomial A_{i,a}^{-1}
Monomial a_inverse(const CartanData& cd, int i, const Spectral& a);

// the group constraint tying the k factor to the Y exponents: for every i the
// i-th coroot pairing of omega equals the total Y_i exponent
bool group_constraint_ok(const CartanData& cd, const Monomial& m);

bool is_dominant(const Monomial& m);  // all Y exponents nonnegative
// at the maximal q-shift of every spectral orbit, all exponents negative;
// false for monomials with no Y factors, error on the identity
bool is_right_negative(const CartanData& cd, const Monomial& m);

// exponents v >= 0 with  m_lo = m_hi * prod A_{i,a}^{-v_{i,a}},  or nullopt;
// uniqueness comes from the triangular shape of A^{-1} (its top Y factor)
std::optional<std::map<std::pair<int, Spectral>, int>> divides_by_A(
    const CartanData& cd, const Monomial& m_hi, const Monomial& m_lo);

// membership of m_target in the forward cone of m: reachable by single
// A^{-1}_{i, b q_i} steps, each requiring a live Y_{i,b} exponent
bool cone_member(const CartanData& cd, const Monomial& m, const Monomial& m_target);

// all cone elements whose A^{-1} content stays below relative shift N with
// respect to the given orbit base points; the support of m must lie in the
// nonnegative-shift part of those orbits
std::vector<Monomial> enumerate_cone_below(const CartanData& cd, const Monomial& m,
                                           const std::vector<Spectral>& classes, long N,
                                           std::size_t cap = 200000);

// an l-weight: an ordinary weight plus, per node, the multiset of linear
// factors (1 - z * point) of the eigenvalue series (order > 0 numerator,
// order < 0 denominator)
struct LWeight {
  WeightVector lambda;
  std::vector<std::map<Spectral, int>> orders;  // size n
};

// the unique group monomial with this l-weight; throws if the coroot pairing
// of lambda does not match the reconstructed Y exponents at some node
Monomial monomial_of_lweight(const CartanData& cd, const LWeight& lw);

// Laurent polynomial in monomials with integer multiplicities
using YPolynomial = std::map<Monomial, long>;

void ypoly_add_term(YPolynomial& p, const Monomial& m, long mult);
YPolynomial ypoly_add(const YPolynomial& a, const YPolynomial& b);
YPolynomial ypoly_sub(const YPolynomial& a, const YPolynomial& b);
YPolynomial ypoly_mul(const YPolynomial& a, const YPolynomial& b);
YPolynomial ypoly_scale(const YPolynomial& a, long s);

// canonical rendering: "Y[1,a*q^2]^-1 * k[-d1]", identity renders as "1";
// the k part shown is omega minus the fundamental-weight content implied by
// the Y exponents (zero for genuine group elements up to delta terms)
std::string mono_str(const CartanData& cd, const Monomial& m);
std::string ypoly_str(const CartanData& cd, const YPolynomial& p);

}  // namespace qaf
