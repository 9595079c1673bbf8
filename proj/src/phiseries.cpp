#include "qaf/phiseries.hpp"

#include <sstream>
#include <stdexcept>

namespace qaf {

std::string UPoint::str() const {
  std::string s = p.str();
  if (uexp == 1) s += "*u";
  else if (uexp != 0) s += "*u^" + std::to_string(uexp);
  return s;
}

void PhiSeries::add_factor(const UPoint& pt, int mult) {
  if (mult == 0) return;
  int& slot = fac_[pt];
  slot += mult;
  if (slot == 0) fac_.erase(pt);
}

int PhiSeries::balance() const {
  int b = 0;
  for (const auto& [pt, e] : fac_) { (void)pt; b += e; }
  return b;
}

PhiSeries PhiSeries::operator*(const PhiSeries& o) const {
  PhiSeries out(pref_ * o.pref_);
  out.fac_ = fac_;
  for (const auto& [pt, e] : o.fac_) out.add_factor(pt, e);
  return out;
}

bool PhiSeries::operator<(const PhiSeries& o) const {
  if (!(pref_ == o.pref_)) return pref_ < o.pref_;
  return fac_ < o.fac_;
}

PhiSeries PhiSeries::shift_z_u(long rho) const {
  PhiSeries out(pref_);
  for (const auto& [pt, e] : fac_) out.fac_[UPoint(pt.p, pt.uexp + rho)] = e;
  return out;
}

PhiSeries PhiSeries::specialize_u1() const {
  PhiSeries out(RatQU(pref_.eval_u1()));
  for (const auto& [pt, e] : fac_) out.add_factor(UPoint(pt.p, 0), e);
  return out;
}

bool PhiSeries::u_free() const {
  if (pref_.num().size() > 1 || pref_.den().size() > 1) return false;
  for (const auto& [pt, e] : fac_) { (void)e; if (pt.uexp != 0) return false; }
  return true;
}

namespace {

// coefficient of z^m in  prod_k (1 - z t_k)^{e_k}  by exact series division
RatQU product_series_coef(const std::vector<std::pair<RatQU, int>>& factors, long m) {
  if (m < 0) return RatQU::zero();
  std::vector<RatQU> num = {RatQU::one()}, den = {RatQU::one()};
  auto mul_linear = [m](std::vector<RatQU>& poly, const RatQU& t) {
    std::vector<RatQU> out(std::min<size_t>(poly.size() + 1, (size_t)m + 1), RatQU::zero());
    for (size_t k = 0; k < poly.size(); ++k) {
      if (k < out.size()) out[k] += poly[k];
      if (k + 1 < out.size()) out[k + 1] -= poly[k] * t;
    }
    poly = std::move(out);
  };
  for (const auto& [t, e] : factors) {
    for (int k = 0; k < (e > 0 ? e : -e); ++k) mul_linear(e > 0 ? num : den, t);
  }
  // series coefficients c of num/den:  num_k = sum_j den_j c_{k-j}
  std::vector<RatQU> c((size_t)m + 1, RatQU::zero());
  for (long k = 0; k <= m; ++k) {
    RatQU v = (size_t)k < num.size() ? num[(size_t)k] : RatQU::zero();
    for (size_t j = 1; j < den.size() && (long)j <= k; ++j)
      v -= den[j] * c[(size_t)(k - j)];
    c[(size_t)k] = v;  // den_0 = 1
  }
  return c[(size_t)m];
}

}  // namespace

RatQU PhiSeries::coef_plus(long m) const {
  std::vector<std::pair<RatQU, int>> factors;
  for (const auto& [pt, e] : fac_) factors.push_back({pt.value(), e});
  return pref_ * product_series_coef(factors, m);
}

RatQU PhiSeries::coef_minus(long m) const {
  if (balance() != 0)
    throw std::logic_error("coef_minus: series is not balanced at infinity");
  RatQU lead = pref_;
  std::vector<std::pair<RatQU, int>> factors;
  for (const auto& [pt, e] : fac_) {
    RatQU v = pt.value();
    lead *= v.pow(e);
    factors.push_back({v.inv(), e});
  }
  return lead * product_series_coef(factors, m);
}

std::map<Spectral, int> PhiSeries::orders_u1() const {
  std::map<Spectral, int> out;
  for (const auto& [pt, e] : fac_) {
    if (pt.uexp != 0)
      throw std::logic_error("orders_u1: series still involves u");
    out[pt.p] = e;
  }
  return out;
}

std::string PhiSeries::str() const {
  std::ostringstream os;
  os << pref_.str();
  for (const auto& [pt, e] : fac_) {
    os << " * (1-z*" << pt.str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LWeight lweight_of_profiles(const CartanData& cd, const WeightVector& wt,
                            const std::vector<PhiSeries>& per_node) {
  if ((int)per_node.size() != cd.n)
    throw std::invalid_argument("lweight_of_profiles: wrong node count");
  LWeight lw;
  lw.lambda = wt;
  lw.orders.resize((size_t)cd.n);
  for (int i = 0; i < cd.n; ++i) {
    const mpq_class& coord = wt[(size_t)i];
    if (coord.get_den() != 1)
      throw std::invalid_argument("lweight_of_profiles: non-integral coroot pairing");
    RatQU expect = RatQU(RatQ::q_pow(cd.ri(i) * coord.get_num().get_si()));
    if (!(per_node[(size_t)i].pref() == expect))
      throw std::invalid_argument("lweight_of_profiles: series prefactor does not match weight");
    lw.orders[(size_t)i] = per_node[(size_t)i].orders_u1();
  }
  return lw;
}

namespace {

ExpPolyFamily diagonal_family(const std::vector<PhiSeries>& diag, bool plus) {
  int d = (int)diag.size();
  std::set<ExpPolySig> sig_set;
  for (const auto& s : diag) {
    if (plus && s.balance() > 0)
      throw std::logic_error("plus_family: series has a polynomial part of positive degree");
    if (!plus && s.balance() != 0)
      throw std::logic_error("minus_family: series not balanced at infinity");
    for (const auto& [pt, e] : s.factors()) {
      if (e >= 0) continue;
      for (int k = 0; k < -e; ++k) {
        if (plus)
          sig_set.insert({pt.qvalue(), pt.uexp, k});
        else
          sig_set.insert({pt.qvalue().inv(), -pt.uexp, k});
      }
    }
  }
  std::vector<ExpPolySig> sigs(sig_set.begin(), sig_set.end());
  auto sample = [&](long m) {
    Mat<RatQU> mat(d, d);
    for (int v = 0; v < d; ++v)
      mat.at(v, v) = plus ? diag[(size_t)v].coef_plus(m) : diag[(size_t)v].coef_minus(m);
    return mat;
  };
  ExpPolyFamily fam(d, d);
  if (!sigs.empty()) {
    auto comps = separate_components(sigs, sample, 1);
    for (const auto& [sig, mat] : comps) fam.add_term(sig, mat);
    fam.prune();
  }
  long k = (long)sigs.size();
  for (long m = k + 1; m <= k + 3; ++m)
    if (!(fam.eval(m) == sample(m)))
      throw std::logic_error("diagonal_family: reconstructed family fails verification");
  return fam;
}

}  // namespace

ExpPolyFamily plus_family(const std::vector<PhiSeries>& diag) {
  return diagonal_family(diag, true);
}

ExpPolyFamily minus_family(const std::vector<PhiSeries>& diag) {
  return diagonal_family(diag, false);
}

}  // namespace qaf
