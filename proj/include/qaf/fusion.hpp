#pragma once
// The u-deformed coproduct on explicit modules: tensor actions with the
// right factor's spectral variable scaled by u^power, infinite coproduct
// tails resolved in closed form per signature pair.

#include "qaf/module.hpp"

#include <string>

namespace qaf {

struct FusionSpec {
  ExplicitModule left, right;
  long power = 1;  // deformation exponent; >= 1 unless one operand is trivial
};

// tensor module over Q(q)(u); operands must share Cartan data and carry
// diagonal loop-Cartan series (every module built here does)
ExplicitModule fuse(const FusionSpec& spec);
ExplicitModule fuse(const ExplicitModule& left, const ExplicitModule& right, long power);

// neutrality of the trivial module: the tensor with power 0 reproduces the
// other operand's families exactly (asserted), and that operand is returned
enum class Side { Left, Right };
ExplicitModule fuse_with_trivial(const ExplicitModule& v, Side trivial_side);

// (Id x D_{u^r'}) o D_{u^r}  versus  (D_{u^r} x Id) o D_{u^{r+r'}}:
// both triple products are built and every action family is compared exactly
// by signature, then re-checked on the mode grid [-window, window]
bool check_twisted_coassoc(const ExplicitModule& v1, const ExplicitModule& v2,
                           const ExplicitModule& v3, long r, long rprime, int window,
                           std::string* report = nullptr);
// the naive comparison with equal outer powers; false for genuine modules
bool check_untwisted_coassoc(const ExplicitModule& v1, const ExplicitModule& v2,
                             const ExplicitModule& v3, int window);

// the module has a unique maximal weight carried by a single basis line and
// that line generates everything; false when the top is not unique
bool is_lu_highest_weight(ExplicitModule& fused);

}  // namespace qaf
