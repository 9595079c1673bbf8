#pragma once
// Lattices over the local ring A of rational functions of u regular at u=1,
// inside explicit modules over Q(q)(u): canonical echelon bases, cyclic
// closures under the generator mode blocks, and specialization at u=1.

#include "qaf/fusion.hpp"
#include "qaf/module.hpp"

#include <vector>

namespace qaf {

// A-span of finitely many ambient vectors, held in canonical echelon form:
// one pivot column per row, pivot entry exactly (1-u)^e with e the minimal
// valuation in that column, entries above a pivot reduced to Laurent
// polynomials in (u-1) of degree < e.  Rows are weight-homogeneous.
struct ALattice {
  ExplicitModule ambient;
  std::vector<std::vector<RatQU>> basis;
  std::vector<int> pivot_col;
  std::vector<long> pivot_val;
};

// canonical echelon basis of the A-span of the given vectors
ALattice make_lattice(const ExplicitModule& ambient, const std::vector<std::vector<RatQU>>& gens);

// smallest sub-A-module containing v and stable under every generator mode;
// stability is achieved through finite mode blocks: each exp-poly family
// satisfies a recurrence whose leading and trailing coefficients are units in
// A, so closure under one block of consecutive modes closes all modes
ALattice cyclic_aform(ExplicitModule& v_module, const std::vector<RatQU>& v);

// the valuation bookkeeping n(v): minus the smallest (u-1)-adic valuation of
// the coordinates of v in the lattice basis, so n((1-u)^k v) = n(v) - k
long n_valuation(const ALattice& lattice, const std::vector<RatQU>& v);

ALattice lattice_sum(const ALattice& l1, const ALattice& l2);

// the lattice spans the ambient module; returns the module over Q(q) acting
// on the lattice basis reduced at u=1, with every family re-separated from
// exact samples of the conjugated action
ExplicitModule specialize_u1(const ALattice& lattice);

// left-associated fusion of l-highest-weight modules over Q(q) (each with its
// top vector at index 0), cyclic A-form at the tensor of top vectors
ALattice star_fusion_form(const std::vector<ExplicitModule>& mods);
// ... and its specialization at u=1
ExplicitModule star_fusion(const std::vector<ExplicitModule>& mods);

// the full-basis variant: sum of cyclic forms over every basis tensor pair
ALattice tensor_d_form(const ExplicitModule& v1, const ExplicitModule& v2);
ExplicitModule tensor_d(const ExplicitModule& v1, const ExplicitModule& v2);

}  // namespace qaf
