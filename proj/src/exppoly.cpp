#include "qaf/exppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaf {

RatQU sig_value(const ExpPolySig& s, long m) {
  RatQU v = RatQU(s.base.pow(m)) * RatQU::u_pow(s.uexp * m);
  if (s.mdeg > 0) {
    if (m == 0) return RatQU::zero();
    v *= RatQU::integer(m).pow(s.mdeg);
  }
  return v;
}

void ExpPolyFamily::add(const ExpPolySig& s, int i, int j, const RatQU& v) {
  if (v.is_zero()) return;
  auto it = t_.find(s);
  if (it == t_.end()) it = t_.emplace(s, Mat<RatQU>(r_, c_)).first;
  it->second.at(i, j) += v;
}

void ExpPolyFamily::add_term(const ExpPolySig& s, const Mat<RatQU>& m) {
  auto it = t_.find(s);
  if (it == t_.end()) {
    t_.emplace(s, m);
  } else {
    it->second = it->second + m;
  }
}

void ExpPolyFamily::prune() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->second.is_zero())
      it = t_.erase(it);
    else
      ++it;
  }
}

Mat<RatQU> ExpPolyFamily::eval(long m) const {
  Mat<RatQU> out(r_, c_);
  for (const auto& [s, mat] : t_) {
    RatQU v = sig_value(s, m);
    if (v.is_zero()) continue;
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!mat.at(i, j).is_zero()) out.at(i, j) += mat.at(i, j) * v;
  }
  return out;
}

std::vector<ExpPolySig> ExpPolyFamily::signatures() const {
  std::vector<ExpPolySig> out;
  for (const auto& [s, m] : t_)
    if (!m.is_zero()) out.push_back(s);
  return out;
}

bool ExpPolyFamily::is_zero() const {
  for (const auto& [s, m] : t_)
    if (!m.is_zero()) return false;
  return true;
}

ExpPolyFamily ExpPolyFamily::operator+(const ExpPolyFamily& o) const {
  ExpPolyFamily out = *this;
  for (const auto& [s, m] : o.t_) out.add_term(s, m);
  out.prune();
  return out;
}

ExpPolyFamily ExpPolyFamily::operator-(const ExpPolyFamily& o) const {
  ExpPolyFamily out = *this;
  for (const auto& [s, m] : o.t_) out.add_term(s, m.scaled(-RatQU::one()));
  out.prune();
  return out;
}

ExpPolyFamily ExpPolyFamily::scaled(const RatQU& s) const {
  ExpPolyFamily out(r_, c_);
  if (s.is_zero()) return out;
  for (const auto& [sig, m] : t_) out.add_term(sig, m.scaled(s));
  return out;
}

ExpPolyFamily ExpPolyFamily::conjugated(const Mat<RatQU>& P, const Mat<RatQU>& Q) const {
  ExpPolyFamily out(P.r, Q.c);
  for (const auto& [sig, m] : t_) out.add_term(sig, P * m * Q);
  out.prune();
  return out;
}

bool ExpPolyFamily::operator==(const ExpPolyFamily& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  ExpPolyFamily a = *this, b = o;
  a.prune();
  b.prune();
  return a.t_ == b.t_;
}

int family_order(const ExpPolyFamily& f) {
  std::map<std::pair<RatQ, long>, int> groups;
  for (const auto& s : f.signatures()) {
    auto key = std::make_pair(s.base, s.uexp);
    auto it = groups.find(key);
    int need = s.mdeg + 1;
    if (it == groups.end())
      groups[key] = need;
    else
      it->second = std::max(it->second, need);
  }
  int total = 0;
  for (const auto& [k, v] : groups) total += v;
  return total;
}

RatQU tail_sum(const RatQU& x, int s) {
  if (s < 0) throw std::logic_error("tail_sum: negative power");
  // cache of the integer polynomials P_s (coefficient lists, ascending)
  static std::vector<std::vector<mpz_class>> P = {{0, 1}};  // P_0 = X
  while ((int)P.size() <= s) {
    const auto& p = P.back();
    int sp = (int)P.size() - 1;  // current top index
    // next = X * (p' * (1 - X) + (sp+1) * p)
    std::vector<mpz_class> w(p.size() + 1, mpz_class(0));
    for (size_t k = 0; k < p.size(); ++k) {
      if (k >= 1) {
        w[k - 1] += mpz_class(k) * p[k];      // p' term
        w[k] -= mpz_class(k) * p[k];          // -X p' term
      }
      w[k] += mpz_class(sp + 1) * p[k];
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
    std::vector<mpz_class> next(w.size() + 1, mpz_class(0));
    for (size_t k = 0; k < w.size(); ++k) next[k + 1] = w[k];
    P.push_back(std::move(next));
  }
  const auto& p = P[(size_t)s];
  RatQU num = RatQU::zero();
  for (size_t k = p.size(); k-- > 0;) {
    num = num * x;
    if (p[k] != 0) num += RatQU(RatQ::rational(mpq_class(p[k])));
  }
  RatQU om = RatQU::one() - x;
  if (om.is_zero()) throw std::logic_error("tail_sum: pole at x = 1");
  return num / om.pow(s + 1);
}

std::vector<RatQU> annihilator_for(const std::vector<ExpPolySig>& sigs) {
  // group by (base, uexp), track max mdeg
  std::map<std::pair<long, RatQ>, int> groups;  // (uexp, base) -> max mdeg
  for (const auto& s : sigs) {
    auto key = std::make_pair(s.uexp, s.base);
    auto it = groups.find(key);
    if (it == groups.end())
      groups.emplace(key, s.mdeg);
    else if (s.mdeg > it->second)
      it->second = s.mdeg;
  }
  // polynomial in the backward-shift T: product of (1 - beta T)^{d+1}
  std::vector<RatQU> c = {RatQU::one()};
  for (const auto& [key, d] : groups) {
    RatQU beta = RatQU(key.second) * RatQU::u_pow(key.first);
    for (int rep = 0; rep <= d; ++rep) {
      std::vector<RatQU> nc(c.size() + 1, RatQU::zero());
      for (size_t k = 0; k < c.size(); ++k) {
        nc[k] += c[k];
        nc[k + 1] -= beta * c[k];
      }
      c = std::move(nc);
    }
  }
  return c;
}

std::map<ExpPolySig, Mat<RatQU>> separate_components(
    const std::vector<ExpPolySig>& sigs,
    const std::function<Mat<RatQU>(long)>& sample, long m0) {
  int K = (int)sigs.size();
  if (K == 0) return {};
  Mat<RatQU> V(K, K);
  for (int row = 0; row < K; ++row)
    for (int s = 0; s < K; ++s) V.at(row, s) = sig_value(sigs[(size_t)s], m0 + row);
  auto Vinv = inverse(V);
  if (!Vinv) throw std::logic_error("separate_components: singular sample system");
  std::vector<Mat<RatQU>> samples;
  samples.reserve((size_t)K);
  for (int row = 0; row < K; ++row) samples.push_back(sample(m0 + row));
  int R = samples[0].r, C = samples[0].c;
  std::map<ExpPolySig, Mat<RatQU>> out;
  for (int s = 0; s < K; ++s) {
    Mat<RatQU> comp(R, C);
    for (int row = 0; row < K; ++row) {
      const RatQU& w = Vinv->at(s, row);
      if (w.is_zero()) continue;
      for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
          if (!samples[(size_t)row].at(i, j).is_zero())
            comp.at(i, j) += samples[(size_t)row].at(i, j) * w;
    }
    if (!comp.is_zero()) out.emplace(sigs[(size_t)s], comp);
  }
  return out;
}

}  // namespace qaf
