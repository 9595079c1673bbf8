#include "qaf/fixtures.hpp"

#include "qaf/fusion.hpp"

#include <stdexcept>

namespace qaf {

CartanData fixture_cartan(const std::string& name) {
  if (name == "sl2") return CartanData::from_matrix({{2}});
  if (name == "sl3") return CartanData::from_matrix({{2, -1}, {-1, 2}});
  if (name == "b2") return CartanData::from_matrix({{2, -1}, {-2, 2}});
  if (name == "g2") return CartanData::from_matrix({{2, -1}, {-3, 2}});
  if (name == "a1aff") return CartanData::from_matrix({{2, -2}, {-2, 2}});
  throw std::invalid_argument("unknown Cartan fixture '" + name + "'");
}

std::vector<std::string> fixture_cartan_names() {
  return {"sl2", "sl3", "b2", "g2", "a1aff"};
}

ExplicitModule fixture_module(const std::string& name) {
  if (name == "pair-q2")
    return fuse(kr_sl2(1, Spectral(0, -1)), kr_sl2(1, Spectral(0, 1)), 1);
  if (name == "pair-q2-rl")
    return fuse(kr_sl2(1, Spectral(0, 1)), kr_sl2(1, Spectral(0, -1)), 1);
  throw std::invalid_argument("unknown module fixture '" + name + "'");
}

std::vector<std::string> fixture_module_names() { return {"pair-q2", "pair-q2-rl"}; }

}  // namespace qaf
