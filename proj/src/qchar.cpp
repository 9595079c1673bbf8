#include "qaf/qchar.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaf {

namespace {

bool i_dominant(const Monomial& m, int i) {
  for (const auto& [key, e] : m.ye)
    if (key.first == i && e < 0) return false;
  return true;
}

// maximal-string decomposition of the i-restriction, greedy from the top
// point downwards; returns (bottom point, length) pairs
std::vector<std::pair<Spectral, int>> i_strings(const CartanData& cd, const Monomial& m, int i) {
  long step = 2 * cd.ri(i);
  std::map<Spectral, int> rem;
  for (const auto& [key, e] : m.ye)
    if (key.first == i && e > 0) rem[key.second] = e;
  std::vector<std::pair<Spectral, int>> out;
  while (!rem.empty()) {
    Spectral top = std::prev(rem.end())->first;
    Spectral cur = top;
    int len = 0;
    while (true) {
      auto it = rem.find(cur);
      if (it == rem.end()) break;
      it->second -= 1;
      if (it->second == 0) rem.erase(it);
      ++len;
      cur = cur.shifted(-step);
    }
    out.emplace_back(cur.shifted(step), len);
  }
  return out;
}

// sl2-type completion of the i-restriction: product over strings of the
// ladder sums 1 + sum_j prod_{t<=j} A^{-1}_{i, b q_i^{2(len-t)+1}}
YPolynomial i_completion(const CartanData& cd, const Monomial& m, int i) {
  YPolynomial comp;
  ypoly_add_term(comp, identity_monomial(cd), 1);
  for (const auto& [bottom, len] : i_strings(cd, m, i)) {
    YPolynomial s;
    Monomial ladder = identity_monomial(cd);
    ypoly_add_term(s, ladder, 1);
    for (int j = 1; j <= len; ++j) {
      ladder = ladder * a_inverse(cd, i, bottom.shifted(cd.ri(i) * (2 * (len - j) + 1)));
      ypoly_add_term(s, ladder, 1);
    }
    comp = ypoly_mul(comp, s);
  }
  return comp;
}

}  // namespace

Monomial kr_top(const CartanData& cd, int i, int r, const Spectral& a) {
  if (r < 0) throw std::invalid_argument("kr_top: negative level");
  Monomial t = identity_monomial(cd);
  for (int s = 0; s < r; ++s) t = t * y_gen(cd, i, a.shifted(2 * cd.ri(i) * s), 1);
  return t;
}

FMResult fm_expand(const CartanData& cd, const Monomial& top, std::size_t cap) {
  if (!is_dominant(top)) throw std::invalid_argument("fm_expand: seed monomial is not dominant");
  if (!group_constraint_ok(cd, top))
    throw std::invalid_argument("fm_expand: seed monomial violates the group constraint");

  struct Node {
    std::vector<long> from;
  };
  std::map<Monomial, Node> nodes;
  std::map<long, std::set<Monomial>> agenda;
  nodes.emplace(top, Node{std::vector<long>((size_t)cd.n, 0)});
  agenda[0].insert(top);

  FMResult res;
  auto depth_of = [&](const Monomial& m) -> long {
    auto dv = divides_by_A(cd, top, m);
    if (!dv) throw std::logic_error("fm_expand: generated monomial escaped the cone");
    long d = 0;
    for (const auto& [k, e] : *dv) d += e;
    return d;
  };

  while (!agenda.empty()) {
    auto it = agenda.begin();
    long depth = it->first;
    std::set<Monomial> layer = std::move(it->second);
    agenda.erase(it);
    for (const Monomial& m : layer) {
      Node& nd = nodes.at(m);
      long mult = m == top ? 1 : 0;
      for (long f : nd.from) mult = std::max(mult, f);
      for (int i = 0; i < cd.n; ++i) {
        long deficit = mult - nd.from[(size_t)i];
        if (deficit <= 0) continue;
        if (!i_dominant(m, i)) {
          res.status = FMResult::Status::Stuck;
          res.offender = m;
          return res;
        }
        YPolynomial comp = i_completion(cd, m, i);
        for (const auto& [mu, c] : comp) {
          if (mu.is_identity()) continue;
          Monomial m2 = m * mu;
          auto nit = nodes.find(m2);
          if (nit == nodes.end()) {
            if (nodes.size() >= cap) {
              res.status = FMResult::Status::CapExceeded;
              res.offender = m;
              return res;
            }
            if (is_dominant(m2)) {
              res.status = FMResult::Status::NotSpecial;
              res.offender = m2;
              return res;
            }
            long d2 = depth_of(m2);
            if (d2 <= depth) throw std::logic_error("fm_expand: depth did not increase");
            nit = nodes.emplace(m2, Node{std::vector<long>((size_t)cd.n, 0)}).first;
            agenda[d2].insert(m2);
          }
          nit->second.from[(size_t)i] += deficit * c;
        }
        nd.from[(size_t)i] = mult;
      }
    }
  }

  for (const auto& [m, nd] : nodes) {
    long mult = m == top ? 1 : 0;
    for (long f : nd.from) mult = std::max(mult, f);
    ypoly_add_term(res.chi, m, mult);
  }
  return res;
}

const YPolynomial& kr_qchar(const CartanData& cd, int i, int r, const Spectral& a,
                            std::size_t cap) {
  static std::map<std::string, YPolynomial> cache;
  std::ostringstream key;
  for (const auto& row : cd.C)
    for (long v : row) key << v << ",";
  key << "|" << i << "|" << r << "|" << a.cls << ":" << a.shift;
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;

  FMResult res = fm_expand(cd, kr_top(cd, i, r, a), cap);
  switch (res.status) {
    case FMResult::Status::Ok:
      break;
    case FMResult::Status::NotSpecial:
      throw std::runtime_error("kr_qchar: expansion found a second dominant monomial");
    case FMResult::Status::CapExceeded:
      throw std::runtime_error("kr_qchar: expansion exceeded the node cap");
    case FMResult::Status::Stuck:
      throw std::runtime_error("kr_qchar: expansion stuck on a non-dominant deficit");
  }
  return cache.emplace(key.str(), std::move(res.chi)).first->second;
}

YPolynomial dominant_part(const YPolynomial& chi) {
  YPolynomial out;
  for (const auto& [m, c] : chi)
    if (is_dominant(m)) out[m] = c;
  return out;
}

std::map<WeightVector, long> beta_restrict(const CartanData& cd, const YPolynomial& chi) {
  (void)cd;
  std::map<WeightVector, long> out;
  for (const auto& [m, c] : chi) {
    out[m.omega] += c;
    if (out[m.omega] == 0) out.erase(m.omega);
  }
  return out;
}

}  // namespace qaf
