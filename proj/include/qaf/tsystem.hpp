#pragma once
// The splitting term of the generalized T-system, the T-system identity
// itself, its dominant-monomial core, the short exact sequence behind it
// (character level in general, explicit modules for the one-node datum),
// the weight-character Q-system, and the normalized asymptotic limit check.

#include "qaf/qchar.hpp"

#include <string>
#include <vector>

namespace qaf {

struct STermFactor {
  int j = 0;       // node of the string-module factor
  int k = 0;       // column multiplicity index, 1 .. -C[i][j]
  int level = 0;   // factor level
  long shift = 0;  // spectral q-shift relative to the base parameter
};

struct STermSpec {
  int i = 0;
  int r = 1;
  Spectral a;
  std::vector<STermFactor> factors;
  // realized weight of the pure-k prefactor; its coroot pairings all vanish
  WeightVector nu;
};

// derive the factor list {(j,k) : C[j][i] < 0, 1 <= k <= -C[i][j]} with
// levels -C[j][i] + floor(r_i (r-k) / r_j) and shifts -r_j (2k-1) / C[i][j];
// cross-checked against the explicit long-node/short-node case analysis
STermSpec s_term_spec(const CartanData& cd, int i, int r, const Spectral& a);

// q-character of the splitting term: the k-prefactor monomial times the
// product of the factor string-module characters
YPolynomial s_term_qchar(const CartanData& cd, int i, int r, const Spectral& a);

struct TSystemReport {
  bool holds = false;
  YPolynomial residual;  // chi_r chi_r' - chi_{r+1} chi_{r-1}' - chi_S
};

// exact check of
//   chi(W_{r,a}) chi(W_{r,a q_i^2})
//     = chi(W_{r+1,a}) chi(W_{r-1,a q_i^2}) + chi(S_{r,a})
TSystemReport verify_tsystem(const CartanData& cd, int i, int r, const Spectral& a);

// the product of both highest monomials with the inner A^{-1} ladder equals
// the splitting term's highest monomial, and the dominant part of the
// product difference is exactly that monomial with multiplicity one
bool dominant_identity_check(const CartanData& cd, int i, int r, const Spectral& a);

struct ExactSequenceReport {
  bool character_ok = false;     // chi(middle) = chi(sub) + chi(quotient)
  bool module_checked = false;   // the explicit one-node construction ran
  bool middle_lhw = false;       // star fusion is l-highest weight
  int middle_dominant_monomials = 0;  // expected: exactly two
  bool middle_not_simple = false;
  bool sub_ok = false;           // second dominant l-weight vector generates
                                 // a submodule with the splitting character
  bool quotient_simple = false;  // W_{r+1,a} * W_{r-1,aq^2} passes the
                                 // simplicity criterion
  bool holds = false;
  std::string detail;
};

// sub -> W_{r,a} * W_{r,aq_i^2} -> W_{r+1,a} * W_{r-1,aq_i^2}: character
// level for any admissible datum; for the one-node datum the middle and
// quotient star fusions are built explicitly and examined
ExactSequenceReport exact_sequence_check(const CartanData& cd, int i, int r, const Spectral& a);

struct QSystemReport {
  bool holds = false;
  bool spectral_independent = false;  // beta image does not see the parameter
  long lhs_dim = 0;                   // total multiplicity, left side
  long rhs_dim = 0;                   // total multiplicity, right side
};

// the T-system pushed to ordinary weight characters via beta_restrict
QSystemReport qsystem_check(const CartanData& cd, int i, int r);

struct AsymptoticReport {
  int depth = 0;
  int k_max = 0;
  bool char_stabilized = false;
  int char_k0 = 0;  // least k with all truncations from k to k_max equal
  bool beta_stabilized = false;
  int beta_k0 = 0;
};

// normalized characters chi(W_{k, a q_i^{-2k}}) / top, re-expressed in
// A^{-1} exponents and truncated at total degree <= depth; reports from
// which k the truncation (and its weight-restriction image) is constant
AsymptoticReport asymptotic_check(const CartanData& cd, int i, const Spectral& a, int depth,
                                  int k_max);

}  // namespace qaf
