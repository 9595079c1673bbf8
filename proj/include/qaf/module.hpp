#pragma once
// Finite-dimensional modules given by explicit generator actions: per node,
// exponential-polynomial mode families for the raising/lowering series, and
// diagonal eigenvalue series (or reconstructed mode families) for the
// loop-Cartan operators.  The Cartan subalgebra itself acts through the
// stored weights.

#include "qaf/cartan.hpp"
#include "qaf/exppoly.hpp"
#include "qaf/monomial.hpp"
#include "qaf/phiseries.hpp"

#include <string>
#include <vector>

namespace qaf {

struct CandidateProfile {
  WeightVector wt;
  std::vector<PhiSeries> phi;  // per node
};

struct ExplicitModule {
  CartanData cd;
  std::string base_field;  // "Q(q)" or "Q(q)(u)" (entries are held as RatQU)
  int dim = 0;
  std::vector<WeightVector> wt;
  std::vector<std::string> label;
  int grade = 1;  // number of elementary factors, drives fusion deformation powers

  std::vector<ExpPolyFamily> xp, xm;  // per node, modes over all integers

  // loop-Cartan action: either diagonal series per basis vector, or mode
  // families (modes m >= 1; phim(m) is the coefficient at mode -m)
  bool phi_diagonal = false;
  std::vector<std::vector<PhiSeries>> phi;  // [node][vector]
  std::vector<ExpPolyFamily> phip, phim;    // filled directly, or lazy caches

  // for non-diagonal modules obtained by specialization: the multiset of
  // expected l-weight profiles, one entry per ambient lattice vector
  std::vector<CandidateProfile> cand;
};

// diagonal Cartan matrices read off the weights (integral pairings required)
Mat<RatQU> k_matrix(const ExplicitModule& m, int i, int sign);

// the mode family of the +/- loop-Cartan series at node i (derived from the
// diagonal series on first use and cached)
const ExpPolyFamily& phi_family(ExplicitModule& m, int i, bool plus);

// evaluated loop-Cartan operator at an arbitrary integer mode, with the
// conventions phi^+_0 = k, phi^-_0 = k^{-1}, and zero off-support
Mat<RatQU> phi_mode(ExplicitModule& m, int i, bool plus, long mode);

// standard sl2 Kirillov-Reshetikhin module with a centered spectral string:
// highest l-weight built on Y-string a*q^{-r+1}, a*q^{-r+3}, ..., a*q^{r-1}
ExplicitModule kr_sl2(int r, const Spectral& a);
// the same module with left-aligned string a, a*q^2, ..., a*q^{2(r-1)}
ExplicitModule kr_sl2_string(int r, const Spectral& a);

// one-dimensional module of weight lambda (all coroot pairings must vanish)
ExplicitModule fundamental_L(const CartanData& cd, const WeightVector& lambda);
ExplicitModule trivial_module(const CartanData& cd);

struct RelationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// exact verification of the defining relations on a mode grid wide enough to
// certify the exponential-polynomial identities:
//   weight grading of all families, the pairing of raising/lowering modes
//   against the loop-Cartan modes, the quadratic exchange relation, the
//   loop-Cartan/raising exchange relations, and (for diagonal series) the
//   logarithmic-mode commutators
RelationReport verify_relations(ExplicitModule& m, int window);

struct LClass {
  WeightVector wt;
  std::vector<PhiSeries> profile;         // per node
  int mult = 0;                           // dimension of the class space
  std::vector<int> members;               // basis indices (diagonal case)
  std::vector<std::vector<RatQU>> space;  // basis of the class space
};

// decomposition into joint generalized eigenspaces of the loop-Cartan
// operators; diagonal modules group basis vectors, specialized modules verify
// the candidate spectrum against characteristic polynomials per mode
std::vector<LClass> lweight_decomposition(ExplicitModule& m);

// q-character: sum of l-weight monomials with multiplicities; for modules
// over Q(q)(u) the l-weights are collapsed at u = 1 first (the character of
// any u=1 lattice specialization)
YPolynomial qcharacter(ExplicitModule& m);

// dimension of the submodule generated by v under all component matrices
int generated_dim(ExplicitModule& m, const std::vector<RatQU>& v);
bool is_invariant_coordinate_subspace(ExplicitModule& m, const std::vector<int>& idxs);

// v is killed by every raising mode and generates the whole module
bool is_lhw(ExplicitModule& m, const std::vector<RatQU>& v);
bool is_lhw(ExplicitModule& m, int idx);

// block-diagonal sum on the concatenated basis (labels of the second summand
// get a prime so they stay distinct)
ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b);

// s intertwines the two actions: s respects weights and commutes with every
// action family (raising, lowering, loop-Cartan both ways, Cartan diagonals)
bool is_intertwiner(ExplicitModule& a, ExplicitModule& b, const Mat<RatQU>& s);

enum class Simplicity { Simple, NotSimple, Inconclusive };

// sufficient criterion: all l-weight spaces one-dimensional with pairwise
// distinct profiles, and the raising/lowering transition graph between them
// strongly connected; Inconclusive when a space has higher dimension
Simplicity is_simple_criterion(ExplicitModule& m);

}  // namespace qaf
