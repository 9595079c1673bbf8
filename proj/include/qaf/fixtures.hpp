#pragma once
// Built-in Cartan data and example modules so CLI runs and tests need no
// external input files.

#include "qaf/module.hpp"

#include <string>
#include <vector>

namespace qaf {

// named Cartan data:
//   "sl2"   [[2]]
//   "sl3"   [[2,-1],[-1,2]]
//   "b2"    [[2,-1],[-2,2]]   (symmetrizer (2,1))
//   "g2"    [[2,-1],[-3,2]]   (symmetrizer (3,1))
//   "a1aff" [[2,-2],[-2,2]]   (fails the admissibility requirement;
//                              quantum determinant vanishes)
CartanData fixture_cartan(const std::string& name);
std::vector<std::string> fixture_cartan_names();

// named example modules:
//   "pair-q2"     fuse(kr_sl2(1, a q^{-1}), kr_sl2(1, a q), power 1)
//   "pair-q2-rl"  the same operands fused in the opposite order
ExplicitModule fixture_module(const std::string& name);
std::vector<std::string> fixture_module_names();

}  // namespace qaf
