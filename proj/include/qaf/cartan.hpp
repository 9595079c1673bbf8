#pragma once
// Generalized Cartan matrices: validation, minimal symmetrizer, a rational
// completion of the root datum (so simple roots stay independent even when C
// is singular), and the q-deformed Cartan matrix with its determinant checks.

#include "qaf/linalg.hpp"
#include "qaf/ratq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaf {

// weight coordinates: first n entries in fundamental weights L_1..L_n, then
// n-l entries in the completion functionals d_1..d_{n-l}
using WeightVector = std::vector<mpq_class>;

struct CartanData {
  int n = 0;                           // size
  std::vector<std::vector<long>> C;    // the matrix
  std::vector<long> r;                 // minimal positive symmetrizer, gcd 1 per component
  int rank_c = 0;                      // rank of C
  // completion rows: (n - rank_c) x n, [C; kappa] has full column rank
  std::vector<std::vector<mpq_class>> kappa;

  static CartanData from_matrix(const std::vector<std::vector<long>>& m);

  int ext() const { return n - rank_c; }    // number of d-coordinates
  int wdim() const { return n + ext(); }    // length of a WeightVector
  long ri(int i) const { return r[(size_t)i]; }

  // the admissibility constraint used by the T-system machinery:
  // C[i][j] < -1 implies r[i] = -C[j][i] = 1
  bool admissible() const;

  WeightVector wv_zero() const { return WeightVector((size_t)wdim(), mpq_class(0)); }
  WeightVector fundamental(int i) const;
  WeightVector simple_root(int i) const;  // column i of [C; kappa]

  // pairing with the coroot: lambda(alpha_i^vee)
  mpq_class pair_coroot(const WeightVector& w, int i) const { return w[(size_t)i]; }

  Mat<RatQ> quantum_cartan() const;  // diag q_i + q_i^{-1}, offdiag [C_ij]_q
  RatQ quantum_det() const;
  // det nonzero, invariant under q -> q^{-1}, and extreme terms q^{+-R} with
  // unit coefficient, R = sum of r_i
  bool quantum_det_regular() const;

  std::string wv_str(const WeightVector& w) const;
};

WeightVector wv_add(const WeightVector& a, const WeightVector& b);
WeightVector wv_sub(const WeightVector& a, const WeightVector& b);
WeightVector wv_scale(const WeightVector& a, const mpq_class& s);
bool wv_is_zero(const WeightVector& a);

// coordinates of w in the simple-root basis: the unique x with
// sum_i x_i * simple_root(i) = w, or nullopt if w is outside the root span
std::optional<std::vector<mpq_class>> alpha_coords(const CartanData& cd,
                                                   const WeightVector& w);
// w lies in the nonnegative-integer span of the simple roots
bool in_positive_root_cone(const CartanData& cd, const WeightVector& w);
// sum of the alpha-coordinates (throws if outside the root span)
mpq_class root_height(const CartanData& cd, const WeightVector& w);
// all coroot pairings nonnegative
bool is_dominant_weight(const CartanData& cd, const WeightVector& w);

// structural facts tying the minimal symmetrizer to the matrix entries; they
// hold for every admissible matrix and license the monomial calculus:
//  1. r_i >= -C_ji for all i, j
//  2. i != j:  r_i = 1  or  C_ij in {-1, 0}
//  3. r_i = 1:  (j != i and C_ij != 0)  =>  C_ji = -1
//  4. r_i > 1:  C_ij < 0  =>  C_ij = -1
//  5. r_i > 1 and C_ij < 0:  (C_ji = -1 and r_i = r_j) or (C_ji = -r_i and r_j = 1)
//  6. det of the q-deformed Cartan matrix is nonzero
bool symmetrizer_constraints_ok(const CartanData& cd);

}  // namespace qaf
