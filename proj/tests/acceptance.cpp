// Acceptance gate: one verified check per criterion, printed as a single
// pass/fail line with its wall time.  All comparisons are exact symbolic
// equalities; stated time limits are enforced.  Exit code 0 iff every
// criterion passes.

#include "qaf/aform.hpp"
#include "qaf/fixtures.hpp"
#include "qaf/fusion.hpp"
#include "qaf/qchar.hpp"
#include "qaf/tsystem.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qaf;

// --------------------------------------------------------------- utilities

std::vector<RatQU> unit_vec(int dim, int k) {
  std::vector<RatQU> v((size_t)dim, RatQU::zero());
  v[(size_t)k] = RatQU::one();
  return v;
}

long chi_size(const YPolynomial& p) {
  long s = 0;
  for (const auto& [m, mult] : p) s += mult;
  return s;
}

// c * (1 - q^znum u) / (1 - q^zden u)
RatQU ratio_u(const RatQ& c, long znum, long zden) {
  UPoly num{c, c * RatQ::q_pow(znum) * RatQ::integer(-1)};
  UPoly den{RatQ::one(), RatQ::q_pow(zden) * RatQ::integer(-1)};
  return RatQU::from_coeffs(num, den);
}

RatQU one_minus_u() { return RatQU::from_coeffs(UPoly{RatQ::one(), RatQ::integer(-1)}, UPoly{RatQ::one()}); }

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// ------------------------------------------------- shared module corpus

struct FusedCase {
  std::string name;
  ExplicitModule mod;
  YPolynomial factor_product;  // product of the operands' q-characters
};

struct Corpus {
  std::vector<std::pair<std::string, ExplicitModule>> kr;  // sl2 strings, r <= 4
  std::vector<FusedCase> fused;                            // every fusion-type instance
  std::vector<std::pair<std::string, ExplicitModule>> relation_targets;
  std::vector<std::pair<int, ExplicitModule>> star_same;  // r -> W_r * W_{r,q^2}
  std::vector<std::pair<int, ExplicitModule>> star_step;  // r -> W_{r+1} * W_{r-1,q^2}
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    const Spectral a0(0, 0), a1(1, -1);
    for (int r = 1; r <= 4; ++r) {
      out.kr.emplace_back("kr r=" + std::to_string(r) + " @c0:0", kr_sl2(r, a0));
      out.kr.emplace_back("kr r=" + std::to_string(r) + " @c1:-1", kr_sl2(r, a1));
    }

    auto add_fused = [&out](const std::string& name, ExplicitModule left, ExplicitModule right,
                            long power, bool relations) {
      ExplicitModule f = fuse(left, right, power);
      YPolynomial prod = ypoly_mul(qcharacter(left), qcharacter(right));
      if (relations) out.relation_targets.emplace_back(name, f);
      out.fused.push_back({name, std::move(f), std::move(prod)});
    };
    add_fused("fuse 1x1", kr_sl2(1, a0), kr_sl2(1, Spectral(1, 0)), 1, true);
    add_fused("fuse 2x1", kr_sl2(2, a0), kr_sl2(1, Spectral(1, 0)), 1, true);
    add_fused("fuse 2x2", kr_sl2(2, a0), kr_sl2(2, Spectral(1, 0)), 1, true);
    add_fused("pair-q2", kr_sl2(1, Spectral(0, -1)), kr_sl2(1, Spectral(0, 1)), 1, true);
    add_fused("pair-q2-rl", kr_sl2(1, Spectral(0, 1)), kr_sl2(1, Spectral(0, -1)), 1, true);
    add_fused("fuse 2x1 power 2", kr_sl2(2, a0), kr_sl2(1, Spectral(1, 1)), 2, true);
    {
      ExplicitModule w1 = kr_sl2(1, a0), w2 = kr_sl2(1, Spectral(0, 2)), w3 = kr_sl2(1, Spectral(0, 5));
      ExplicitModule inner = fuse(w2, w3, 1);
      ExplicitModule outer = fuse(w1, inner, 1);
      YPolynomial prod = ypoly_mul(qcharacter(w1), ypoly_mul(qcharacter(w2), qcharacter(w3)));
      out.relation_targets.emplace_back("fuse grade 3", outer);
      out.fused.push_back({"fuse grade 3", std::move(outer), std::move(prod)});
    }

    for (int r = 1; r <= 3; ++r) {
      ExplicitModule u1 = kr_sl2(r + 1, a0), u2 = kr_sl2(r - 1, Spectral(0, 2));
      ExplicitModule s_step = star_fusion({u1, u2});
      YPolynomial p_step = ypoly_mul(qcharacter(u1), qcharacter(u2));
      ExplicitModule v1 = kr_sl2(r, a0), v2 = kr_sl2(r, Spectral(0, 2));
      ExplicitModule s_same = star_fusion({v1, v2});
      YPolynomial p_same = ypoly_mul(qcharacter(v1), qcharacter(v2));
      // the u=1 specializations of grade <= 2 dimensions stay in the
      // relation corpus; the larger ones are examined structurally below
      if (r <= 2) {
        out.relation_targets.emplace_back("star step r=" + std::to_string(r), s_step);
        out.relation_targets.emplace_back("star same r=" + std::to_string(r), s_same);
      }
      out.star_step.emplace_back(r, s_step);
      out.star_same.emplace_back(r, s_same);
      out.fused.push_back({"star step r=" + std::to_string(r), std::move(s_step), std::move(p_step)});
      out.fused.push_back({"star same r=" + std::to_string(r), std::move(s_same), std::move(p_same)});
    }

    {
      ExplicitModule m1 = kr_sl2(1, Spectral(0, -1)), m2 = kr_sl2(1, Spectral(0, 1));
      ExplicitModule td = tensor_d(m1, m2);
      YPolynomial prod = ypoly_mul(qcharacter(m1), qcharacter(m2));
      out.relation_targets.emplace_back("tensor-d pair", td);
      out.fused.push_back({"tensor-d pair", std::move(td), std::move(prod)});
    }
    {
      ExplicitModule lr = fixture_module("pair-q2");
      ExplicitModule spec_lr = specialize_u1(cyclic_aform(lr, unit_vec(lr.dim, 0)));
      out.relation_targets.emplace_back("pair-q2 u=1", std::move(spec_lr));
      ExplicitModule rl = fixture_module("pair-q2-rl");
      ExplicitModule spec_rl = specialize_u1(cyclic_aform(rl, unit_vec(rl.dim, 0)));
      out.relation_targets.emplace_back("pair-q2-rl u=1", std::move(spec_rl));
    }
    for (const auto& [name, m] : out.kr) out.relation_targets.emplace_back(name, m);
    return out;
  }();
  return c;
}

// ----------------------------------------------------------- criterion 1

// closed forms for the deformed action on W_r(alpha) (x) W_{r'}(beta),
// power 1, coded independently of the fusion routine:
//   x+_m (v_j x v'_k) = (alpha q^{r-2j+2})^m [r-j+1] (v_{j-1} x v'_k)
//                     + (u beta q^{r'-2k+2})^m B_{j,k} (v_j x v'_{k-1})
//   x-_m (v_j x v'_k) = (u beta q^{r'-2k})^m [k+1] (v_j x v'_{k+1})
//                     + (alpha q^{r-2j})^m M_{j,k} (v_{j+1} x v'_k)
// with Z = u alpha^{-1} beta q^{r'-2k-r+2j}:
//   B_{j,k} = [r'-k+1] ( q^{2j-r} + (q^{-1}-q) Z q
//               ( q [r-j][j+1]/(1-Z q^2) - q^{-1} [j][r-j+1]/(1-Z) ) )
//   M_{j,k} = [j+1] ( q^{r'-2k} + (q-q^{-1}) Z q
//               ( q^{-1} [r'-k][k+1]/(1-Z) - q [k][r'-k+1]/(1-Z q^2) ) )
// and the diagonal series of v_j x v'_k is
//   q^{r-2j+r'-2k} (1-z alpha q^{-r})(1-z alpha q^{r+2})
//                  (1-z u beta q^{-r'})(1-z u beta q^{r'+2})
//   / ( (1-z alpha q^{r-2j+2})(1-z alpha q^{r-2j})
//       (1-z u beta q^{r'-2k+2})(1-z u beta q^{r'-2k}) ).
struct PairOracle {
  int r, rp;
  Spectral a, b;
  RatQ alpha, beta;

  PairOracle(int r_, int rp_, const Spectral& a_, const Spectral& b_)
      : r(r_), rp(rp_), a(a_), b(b_), alpha(a_.value()), beta(b_.value()) {}

  int idx(int j, int k) const { return j * (rp + 1) + k; }
  int dim() const { return (r + 1) * (rp + 1); }

  RatQU Z(int j, int k) const {
    return RatQU::u_pow(1) * RatQU(alpha.inv() * beta * RatQ::q_pow(rp - 2 * k - r + 2 * j));
  }

  RatQU beta_coeff(int j, int k) const {
    RatQU z = Z(j, k);
    RatQU inner = (RatQU(RatQ::q_pow(1) * RatQ::qint(r - j) * RatQ::qint(j + 1)) *
                   (RatQU::one() - z * RatQU(RatQ::q_pow(2))).inv()) -
                  (RatQU(RatQ::q_pow(-1) * RatQ::qint(j) * RatQ::qint(r - j + 1)) *
                   (RatQU::one() - z).inv());
    RatQU val = RatQU(RatQ::q_pow(2 * j - r)) +
                RatQU(RatQ::q_pow(-1) - RatQ::q_pow(1)) * z * RatQU(RatQ::q_pow(1)) * inner;
    return RatQU(RatQ::qint(rp - k + 1)) * val;
  }

  RatQU mu_coeff(int j, int k) const {
    RatQU z = Z(j, k);
    RatQU inner = (RatQU(RatQ::q_pow(-1) * RatQ::qint(rp - k) * RatQ::qint(k + 1)) *
                   (RatQU::one() - z).inv()) -
                  (RatQU(RatQ::q_pow(1) * RatQ::qint(k) * RatQ::qint(rp - k + 1)) *
                   (RatQU::one() - z * RatQU(RatQ::q_pow(2))).inv());
    RatQU val = RatQU(RatQ::q_pow(rp - 2 * k)) +
                RatQU(RatQ::q_pow(1) - RatQ::q_pow(-1)) * z * RatQU(RatQ::q_pow(1)) * inner;
    return RatQU(RatQ::qint(j + 1)) * val;
  }

  Mat<RatQU> xp_mode(long m) const {
    Mat<RatQU> out(dim(), dim());
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= rp; ++k) {
        if (j >= 1)
          out.at(idx(j - 1, k), idx(j, k)) +=
              RatQU(alpha * RatQ::q_pow(r - 2 * j + 2)).pow(m) * RatQU(RatQ::qint(r - j + 1));
        if (k >= 1)
          out.at(idx(j, k - 1), idx(j, k)) +=
              (RatQU::u_pow(1) * RatQU(beta * RatQ::q_pow(rp - 2 * k + 2))).pow(m) *
              beta_coeff(j, k);
      }
    return out;
  }

  Mat<RatQU> xm_mode(long m) const {
    Mat<RatQU> out(dim(), dim());
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= rp; ++k) {
        if (k + 1 <= rp)
          out.at(idx(j, k + 1), idx(j, k)) +=
              (RatQU::u_pow(1) * RatQU(beta * RatQ::q_pow(rp - 2 * k))).pow(m) *
              RatQU(RatQ::qint(k + 1));
        if (j + 1 <= r)
          out.at(idx(j + 1, k), idx(j, k)) +=
              RatQU(alpha * RatQ::q_pow(r - 2 * j)).pow(m) * mu_coeff(j, k);
      }
    return out;
  }

  PhiSeries phi(int j, int k) const {
    PhiSeries ps(RatQU(RatQ::q_pow(r - 2 * j + rp - 2 * k)));
    ps.add_factor(UPoint(a.shifted(-r), 0), +1);
    ps.add_factor(UPoint(a.shifted(r + 2), 0), +1);
    ps.add_factor(UPoint(b.shifted(-rp), 1), +1);
    ps.add_factor(UPoint(b.shifted(rp + 2), 1), +1);
    ps.add_factor(UPoint(a.shifted(r - 2 * j + 2), 0), -1);
    ps.add_factor(UPoint(a.shifted(r - 2 * j), 0), -1);
    ps.add_factor(UPoint(b.shifted(rp - 2 * k + 2), 1), -1);
    ps.add_factor(UPoint(b.shifted(rp - 2 * k), 1), -1);
    return ps;
  }
};

bool crit1_fusion_coefficients(std::ostream& why) {
  const Spectral a(0, 0), b(1, 0);
  for (auto [r, rp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
    PairOracle oracle(r, rp, a, b);
    ExplicitModule fused = fuse(kr_sl2(r, a), kr_sl2(rp, b), 1);
    if (fused.dim != oracle.dim()) {
      why << "dimension mismatch for (" << r << "," << rp << ")\n";
      return false;
    }
    // the mode matrices are exponential-polynomial with at most r+r'+2
    // signatures per entry on either side, so 6 consecutive modes certify
    // equality of the families for every case here
    for (long m = -1; m <= 4; ++m) {
      if (!(fused.xp[0].eval(m) == oracle.xp_mode(m))) {
        why << "raising modes differ from the closed form at (" << r << "," << rp
            << "), mode " << m << "\n";
        return false;
      }
      if (!(fused.xm[0].eval(m) == oracle.xm_mode(m))) {
        why << "lowering modes differ from the closed form at (" << r << "," << rp
            << "), mode " << m << "\n";
        return false;
      }
    }
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= rp; ++k)
        if (!(fused.phi[0][(size_t)oracle.idx(j, k)] == oracle.phi(j, k))) {
          why << "diagonal series differs from the closed form at (" << r << "," << rp
              << "), vector (" << j << "," << k << ")\n";
          return false;
        }
  }
  return true;
}

// ----------------------------------------------------------- criterion 2

bool crit2_pair_tables(std::ostream& why) {
  // left-then-right order
  ExplicitModule lr = fuse(kr_sl2(1, Spectral(0, -1)), kr_sl2(1, Spectral(0, 1)), 1);
  {
    ExpPolyFamily xp(4, 4), xm(4, 4);
    ExpPolySig pure{RatQ::one(), 0, 0}, defo{RatQ::q_pow(2), 1, 0};
    Mat<RatQU> mp(4, 4), mdef(4, 4);
    mp.at(0, 2) = RatQU::one();
    mp.at(1, 3) = RatQU::one();
    xp.add_term(pure, mp);
    mdef.at(0, 1) = ratio_u(RatQ::q_pow(-1), 4, 2);
    mdef.at(2, 3) = ratio_u(RatQ::q_pow(1), 0, 2);
    xp.add_term(defo, mdef);
    Mat<RatQU> nd(4, 4), np(4, 4);
    nd.at(1, 0) = RatQU::one();
    nd.at(3, 2) = RatQU::one();
    xm.add_term(defo, nd);
    np.at(2, 0) = ratio_u(RatQ::q_pow(1), 0, 2);
    np.at(3, 1) = ratio_u(RatQ::q_pow(-1), 4, 2);
    xm.add_term(pure, np);
    if (!(lr.xp[0] == xp) || !(lr.xm[0] == xm)) {
      why << "left-right action table mismatch\n";
      return false;
    }
    auto mkphi = [](long qpow, std::initializer_list<std::tuple<long, long, int>> pts) {
      PhiSeries ps{RatQU(RatQ::q_pow(qpow))};
      for (auto [shift, ue, mult] : pts) ps.add_factor(UPoint(Spectral(0, shift), ue), mult);
      return ps;
    };
    std::vector<PhiSeries> phis = {
        mkphi(2, {{-2, 0, 1}, {0, 1, 1}, {0, 0, -1}, {2, 1, -1}}),
        mkphi(0, {{-2, 0, 1}, {4, 1, 1}, {0, 0, -1}, {2, 1, -1}}),
        mkphi(0, {{2, 0, 1}, {0, 1, 1}, {0, 0, -1}, {2, 1, -1}}),
        mkphi(-2, {{2, 0, 1}, {4, 1, 1}, {0, 0, -1}, {2, 1, -1}})};
    for (int v = 0; v < 4; ++v)
      if (!(lr.phi[0][(size_t)v] == phis[(size_t)v])) {
        why << "left-right diagonal series mismatch at vector " << v << "\n";
        return false;
      }
  }

  // right-then-left order
  ExplicitModule rl = fuse(kr_sl2(1, Spectral(0, 1)), kr_sl2(1, Spectral(0, -1)), 1);
  {
    ExpPolyFamily xp(4, 4), xm(4, 4);
    ExpPolySig pure{RatQ::q_pow(2), 0, 0}, defo{RatQ::one(), 1, 0};
    Mat<RatQU> mp(4, 4), mdef(4, 4);
    mp.at(0, 2) = RatQU::one();
    mp.at(1, 3) = RatQU::one();
    xp.add_term(pure, mp);
    mdef.at(0, 1) = ratio_u(RatQ::q_pow(-1), 0, -2);
    mdef.at(2, 3) = ratio_u(RatQ::q_pow(1), -4, -2);
    xp.add_term(defo, mdef);
    Mat<RatQU> nd(4, 4), np(4, 4);
    nd.at(1, 0) = RatQU::one();
    nd.at(3, 2) = RatQU::one();
    xm.add_term(defo, nd);
    np.at(2, 0) = ratio_u(RatQ::q_pow(1), -4, -2);
    np.at(3, 1) = ratio_u(RatQ::q_pow(-1), 0, -2);
    xm.add_term(pure, np);
    if (!(rl.xp[0] == xp) || !(rl.xm[0] == xm)) {
      why << "right-left action table mismatch\n";
      return false;
    }
  }

  // cyclic integral forms: e0, e1, (1-u) e2, e3 in the first order and the
  // full unit lattice in the opposite order
  ALattice lat_lr = cyclic_aform(lr, unit_vec(4, 0));
  ALattice lat_rl = cyclic_aform(rl, unit_vec(4, 0));
  {
    if (lat_lr.pivot_col != std::vector<int>{0, 1, 2, 3} ||
        lat_lr.pivot_val != std::vector<long>{0, 0, 1, 0}) {
      why << "left-right lattice pivots differ from (1, 1, (1-u), 1)\n";
      return false;
    }
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col) {
        RatQU want = RatQU::zero();
        if (row == col) want = (row == 2) ? one_minus_u() : RatQU::one();
        if (!(lat_lr.basis[(size_t)row][(size_t)col] == want)) {
          why << "left-right lattice basis row " << row << " is not the expected line\n";
          return false;
        }
      }
    if (lat_rl.pivot_val != std::vector<long>{0, 0, 0, 0}) {
      why << "right-left lattice is not the unit lattice\n";
      return false;
    }
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col)
        if (!(lat_rl.basis[(size_t)row][(size_t)col] ==
              (row == col ? RatQU::one() : RatQU::zero()))) {
          why << "right-left lattice basis is not the identity\n";
          return false;
        }
  }

  // specializations: the stated one-dimensional submodules, and only those
  ExplicitModule spec_lr = specialize_u1(lat_lr);
  ExplicitModule spec_rl = specialize_u1(lat_rl);
  {
    std::vector<int> lines_lr, lines_rl;
    for (int j = 0; j < 4; ++j) {
      if (is_invariant_coordinate_subspace(spec_lr, {j})) lines_lr.push_back(j);
      if (is_invariant_coordinate_subspace(spec_rl, {j})) lines_rl.push_back(j);
    }
    if (lines_lr != std::vector<int>{2}) {
      why << "left-right specialization: expected exactly the (1-u) f1 line to be invariant\n";
      return false;
    }
    if (lines_rl != std::vector<int>{1}) {
      why << "right-left specialization: expected exactly the w0 x v1 line to be invariant\n";
      return false;
    }
  }

  // the intertwiner with the stated images
  {
    Mat<RatQU> s(4, 4);
    s.at(0, 0) = RatQU::one();
    s.at(2, 1) = RatQU(RatQ::qint(2));
    s.at(1, 2) = RatQU(RatQ::q_pow(-1) - RatQ::q_pow(1));
    s.at(3, 3) = RatQU::one();
    if (!is_intertwiner(spec_lr, spec_rl, s)) {
      why << "the stated specialization intertwiner does not commute with the actions\n";
      return false;
    }
    if (is_intertwiner(spec_lr, spec_rl, Mat<RatQU>::identity(4))) {
      why << "the identity wrongly passes the intertwiner check\n";
      return false;
    }
  }

  // full-basis deformed tensor product at u=1: cyclic on v1 x w0, with the
  // complementary three-dimensional invariant subspace
  {
    ExplicitModule m1 = kr_sl2(1, Spectral(0, -1)), m2 = kr_sl2(1, Spectral(0, 1));
    ExplicitModule td = tensor_d(m1, m2);
    if (is_lu_highest_weight(td)) {
      why << "the full-basis product should not be highest-weight generated\n";
      return false;
    }
    if (generated_dim(td, unit_vec(4, 2)) != 4) {
      why << "v1 x w0 should generate the whole full-basis product\n";
      return false;
    }
    if (!is_invariant_coordinate_subspace(td, {0, 1, 3}) ||
        generated_dim(td, unit_vec(4, 0)) != 3) {
      why << "the three-dimensional invariant subspace is not as stated\n";
      return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 3

bool crit3_coassociativity(std::ostream& why) {
  struct Triple {
    ExplicitModule v1, v2, v3;
    long r, rp;
    const char* name;
  };
  std::vector<Triple> triples;
  triples.push_back({kr_sl2(1, Spectral(0, 0)), kr_sl2(1, Spectral(0, 2)), kr_sl2(1, Spectral(0, 5)),
                     1, 1, "1/1/1 twists (1,1)"});
  triples.push_back({kr_sl2(1, Spectral(0, 0)), kr_sl2(1, Spectral(1, 1)), kr_sl2(1, Spectral(0, 3)),
                     1, 2, "1/1/1 twists (1,2)"});
  triples.push_back({kr_sl2(2, Spectral(0, 0)), kr_sl2(1, Spectral(0, 3)), kr_sl2(1, Spectral(1, 0)),
                     2, 1, "2/1/1 twists (2,1)"});
  triples.push_back({kr_sl2(1, Spectral(0, 1)), kr_sl2(2, Spectral(1, 0)), kr_sl2(1, Spectral(0, 4)),
                     1, 1, "1/2/1 twists (1,1)"});
  triples.push_back({kr_sl2(1, Spectral(1, 0)), kr_sl2(1, Spectral(0, 3)), kr_sl2(2, Spectral(0, 0)),
                     1, 2, "1/1/2 twists (1,2)"});
  triples.push_back({kr_sl2(2, Spectral(0, 1)), kr_sl2(1, Spectral(1, 2)), kr_sl2(1, Spectral(0, 6)),
                     2, 1, "2/1/1 twists (2,1) shifted"});
  int passed = 0;
  for (const auto& t : triples) {
    std::string report;
    if (!check_twisted_coassoc(t.v1, t.v2, t.v3, t.r, t.rp, 5, &report)) {
      why << "twisted coassociativity fails on triple " << t.name << ": " << report << "\n";
      return false;
    }
    ++passed;
  }
  if (passed < 5) {
    why << "fewer than five triples examined\n";
    return false;
  }
  if (check_untwisted_coassoc(triples[0].v1, triples[0].v2, triples[0].v3, 5)) {
    why << "the untwisted comparison unexpectedly passes (negative control)\n";
    return false;
  }
  return true;
}

// ----------------------------------------------------------- criterion 4

bool crit4_relations(std::ostream& why) {
  for (auto& [name, mod] : corpus().relation_targets) {
    ExplicitModule m = mod;  // verify_relations caches mode families
    RelationReport rep = verify_relations(m, 4);
    if (!rep.ok) {
      why << "relations fail on " << name << ":";
      for (const auto& v : rep.violations) why << " " << v << ";";
      why << "\n";
      return false;
    }
  }
  // negative control: a scaled lowering family breaks the pairing relation
  ExplicitModule bad = kr_sl2(2, Spectral(0, 0));
  bad.xm[0] = bad.xm[0].scaled(RatQU(RatQ::q_pow(1)));
  if (verify_relations(bad, 4).ok) {
    why << "mutated module wrongly passes the relation certificate\n";
    return false;
  }
  return true;
}

// ----------------------------------------------------------- criterion 5

bool crit5_multiplicativity(std::ostream& why) {
  for (auto& fc : corpus().fused) {
    ExplicitModule m = fc.mod;
    if (!(qcharacter(m) == fc.factor_product)) {
      why << "q-character of " << fc.name << " is not the product of the operands'\n";
      return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 6

bool crit6_oracle_equivalence(std::ostream& why) {
  CartanData cd = fixture_cartan("sl2");
  for (int r = 1; r <= 5; ++r)
    for (const Spectral& a : {Spectral(0, 0), Spectral(1, 3)}) {
      FMResult res = fm_expand(cd, kr_top(cd, 0, r, a));
      if (res.status != FMResult::Status::Ok) {
        why << "expansion failed at r=" << r << "\n";
        return false;
      }
      ExplicitModule w = kr_sl2_string(r, a);
      if (!(res.chi == qcharacter(w))) {
        why << "monomial expansion and module q-character disagree at r=" << r << " base "
            << a.str() << "\n";
        return false;
      }
    }
  return true;
}

// ----------------------------------------------------------- criterion 7

bool crit7_specialness(std::ostream& why) {
  for (auto& [name, mod] : corpus().kr) {
    ExplicitModule m = mod;
    YPolynomial dom = dominant_part(qcharacter(m));
    if (dom.size() != 1 || dom.begin()->second != 1) {
      why << name << " does not have a unique dominant monomial\n";
      return false;
    }
  }
  for (auto& [r, mod] : corpus().star_step) {
    ExplicitModule m = mod;
    if (is_simple_criterion(m) != Simplicity::Simple) {
      why << "step star fusion at r=" << r << " fails the simplicity criterion\n";
      return false;
    }
  }
  for (auto& [r, mod] : corpus().star_same) {
    ExplicitModule m = mod;
    YPolynomial dom = dominant_part(qcharacter(m));
    if (chi_size(dom) != 2) {
      why << "equal-level star fusion at r=" << r << " should have exactly two dominant "
          << "monomials, got " << chi_size(dom) << "\n";
      return false;
    }
    if (is_simple_criterion(m) != Simplicity::NotSimple) {
      why << "equal-level star fusion at r=" << r << " should fail simplicity\n";
      return false;
    }
  }
  return true;
}

// -------------------------------------------------------- criteria 8 & 9

struct TSpec {
  const char* cartan;
  int i;
  int r;
};

std::vector<TSpec> tsystem_corpus() {
  std::vector<TSpec> out;
  for (int r = 1; r <= 5; ++r) out.push_back({"sl2", 0, r});
  for (int i = 0; i < 2; ++i)
    for (int r = 1; r <= 3; ++r) out.push_back({"sl3", i, r});
  for (int i = 0; i < 2; ++i)
    for (int r = 1; r <= 2; ++r) out.push_back({"b2", i, r});
  for (int i = 0; i < 2; ++i)
    for (int r = 1; r <= 2; ++r) out.push_back({"g2", i, r});
  return out;
}

// the splitting factor lists re-derived from the two-case analysis: a
// single-column neighbor contributes one factor, a wide column contributes
// one factor per unit of |C[i][j]| with odd spectral shifts
std::vector<STermFactor> case_split_factors(const CartanData& cd, int i, int r) {
  std::vector<STermFactor> out;
  for (int j = 0; j < cd.n; ++j) {
    if (j == i || cd.C[(size_t)j][(size_t)i] >= 0) continue;
    long cij = cd.C[(size_t)i][(size_t)j];
    if (cij == -1) {
      STermFactor f;
      f.j = j;
      f.k = 1;
      f.level = (int)(-cd.C[(size_t)j][(size_t)i] + floor_div(cd.r[(size_t)i] * (r - 1), cd.r[(size_t)j]));
      f.shift = cd.r[(size_t)j];
      out.push_back(f);
    } else {
      long rj = -cij;  // admissibility: r_i = 1 and C[j][i] = -1 here
      for (long k = 1; k <= rj; ++k) {
        STermFactor f;
        f.j = j;
        f.k = (int)k;
        f.level = (int)(1 + floor_div(r - k, rj));
        f.shift = 2 * k - 1;
        out.push_back(f);
      }
    }
  }
  return out;
}

bool same_factors(const std::vector<STermFactor>& a, const std::vector<STermFactor>& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const STermFactor& f) { return std::array<long, 4>{f.j, f.k, f.level, f.shift}; };
  std::multiset<std::array<long, 4>> sa, sb;
  for (const auto& f : a) sa.insert(key(f));
  for (const auto& f : b) sb.insert(key(f));
  return sa == sb;
}

bool crit8_tsystems(std::ostream& why) {
  const Spectral a(0, 0);
  for (const TSpec& s : tsystem_corpus()) {
    CartanData cd = fixture_cartan(s.cartan);
    STermSpec spec = s_term_spec(cd, s.i, s.r, a);
    if (!same_factors(spec.factors, case_split_factors(cd, s.i, s.r))) {
      why << "case-split factor list disagrees with the general formula at " << s.cartan
          << " node " << s.i + 1 << " r=" << s.r << "\n";
      return false;
    }
    TSystemReport rep = verify_tsystem(cd, s.i, s.r, a);
    if (!rep.holds) {
      why << "T-system fails at " << s.cartan << " node " << s.i + 1 << " r=" << s.r << " ("
          << rep.residual.size() << " residual terms)\n";
      return false;
    }
    if (!dominant_identity_check(cd, s.i, s.r, a)) {
      why << "dominant identity fails at " << s.cartan << " node " << s.i + 1 << " r=" << s.r
          << "\n";
      return false;
    }
  }
  return true;
}

bool crit9_qsystems(std::ostream& why) {
  for (const TSpec& s : tsystem_corpus()) {
    CartanData cd = fixture_cartan(s.cartan);
    QSystemReport rep = qsystem_check(cd, s.i, s.r);
    if (!rep.holds || !rep.spectral_independent) {
      why << "Q-system fails at " << s.cartan << " node " << s.i + 1 << " r=" << s.r << "\n";
      return false;
    }
  }
  // dimension bookkeeping at the smallest case: 2*2 = 3 + 1
  CartanData sl2 = fixture_cartan("sl2");
  QSystemReport rep = qsystem_check(sl2, 0, 1);
  if (rep.lhs_dim != 4 || rep.rhs_dim != 4) {
    why << "dimension bookkeeping 2*2 = 3+1 violated: lhs " << rep.lhs_dim << " rhs "
        << rep.rhs_dim << "\n";
    return false;
  }
  const Spectral a(0, 0);
  if (chi_size(kr_qchar(sl2, 0, 2, a)) != 3 ||
      chi_size(fm_expand(sl2, identity_monomial(sl2)).chi) != 1) {
    why << "the 3 + 1 split of the right-hand side is off\n";
    return false;
  }
  return true;
}

// ----------------------------------------------------------- criterion 10

bool crit10_asymptotics(std::ostream& why) {
  const Spectral a(0, 0);
  struct Probe {
    const char* cartan;
    int i;
  };
  for (const Probe& p : {Probe{"sl2", 0}, Probe{"sl3", 0}, Probe{"sl3", 1}}) {
    CartanData cd = fixture_cartan(p.cartan);
    for (int depth = 0; depth <= 2; ++depth) {
      AsymptoticReport rep = asymptotic_check(cd, p.i, a, depth, 4);
      if (!rep.char_stabilized || !rep.beta_stabilized) {
        why << "no stabilization within level 4 at " << p.cartan << " node " << p.i + 1
            << " depth " << depth << "\n";
        return false;
      }
    }
  }
  return true;
}

// ----------------------------------------------------------- criterion 11

bool crit11_property_suite(std::ostream& why) {
  std::mt19937 rng(0xA5F00Du);
  long cases = 0;
  auto fail = [&](const std::string& msg) -> bool {
    why << msg << " (after " << cases << " checks)\n";
    return false;
  };

  std::vector<CartanData> pool;
  pool.push_back(fixture_cartan("sl3"));
  pool.push_back(fixture_cartan("b2"));
  pool.push_back(fixture_cartan("g2"));
  pool.push_back(CartanData::from_matrix({{2, -4}, {-1, 2}}));

  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto rand_spectral = [&] { return Spectral(rand_int(0, 1), rand_int(-3, 3)); };
  auto rand_a_product = [&](const CartanData& cd) {
    Monomial m = identity_monomial(cd);
    int n_fac = rand_int(1, 3);
    for (int t = 0; t < n_fac; ++t) m = m * a_inverse(cd, rand_int(0, cd.n - 1), rand_spectral());
    return m;
  };

  // right-negativity of the generalized inverse roots, and closure of
  // right-negativity under products
  for (int t = 0; t < 200; ++t) {
    const CartanData& cd = pool[(size_t)rand_int(0, (int)pool.size() - 1)];
    Monomial ai = a_inverse(cd, rand_int(0, cd.n - 1), rand_spectral());
    ++cases;
    if (!is_right_negative(cd, ai)) return fail("an inverse-root monomial is not right-negative");
  }
  for (int t = 0; t < 400; ++t) {
    const CartanData& cd = pool[(size_t)rand_int(0, (int)pool.size() - 1)];
    Monomial m1 = rand_a_product(cd), m2 = rand_a_product(cd);
    ++cases;
    if (!is_right_negative(cd, m1) || !is_right_negative(cd, m2))
      return fail("a product of inverse roots is not right-negative");
    ++cases;
    if (!is_right_negative(cd, m1 * m2))
      return fail("right-negativity is not closed under the product");
  }

  // cone truncations: S_{N<=0}(m) = {m}, and finiteness for small N > 0
  for (int t = 0; t < 200; ++t) {
    const CartanData& cd = pool[(size_t)rand_int(0, (int)pool.size() - 1)];
    Monomial m = identity_monomial(cd);
    int n_fac = rand_int(1, 2);
    for (int f = 0; f < n_fac; ++f)
      m = m * y_gen(cd, rand_int(0, cd.n - 1), Spectral(rand_int(0, 1), rand_int(-2, 2)),
                    rand_int(1, 2));
    std::map<int, long> base_shift;
    for (const auto& [key, e] : m.ye) {
      auto it = base_shift.find(key.second.cls);
      if (it == base_shift.end() || key.second.shift < it->second)
        base_shift[key.second.cls] = key.second.shift;
    }
    std::vector<Spectral> classes;
    for (const auto& [cls, shift] : base_shift) classes.emplace_back(cls, shift);
    for (long N : {-1L, 0L}) {
      std::vector<Monomial> s = enumerate_cone_below(cd, m, classes, N);
      ++cases;
      if (s.size() != 1 || !(s[0] == m))
        return fail("the nonpositive-shift cone truncation is not just the seed");
    }
    long N = rand_int(1, 2);
    std::vector<Monomial> s = enumerate_cone_below(cd, m, classes, N, 500000);
    ++cases;
    if (s.empty()) return fail("a cone truncation came back empty");
    bool found = false;
    for (const auto& e : s)
      if (e == m) found = true;
    if (!found) return fail("a cone truncation does not contain its seed");
  }

  // cone property of computed q-characters: every monomial of an l-highest
  // weight character lies in the forward cone of the top, and all non-top
  // monomials of the string-module characters are right-negative
  {
    struct Probe {
      const char* cartan;
      int i;
      int r;
    };
    std::vector<Probe> probes;
    for (int r = 1; r <= 4; ++r) probes.push_back({"sl2", 0, r});
    for (int r = 1; r <= 2; ++r) probes.push_back({"sl3", 0, r});
    probes.push_back({"b2", 0, 1});
    probes.push_back({"b2", 1, 1});
    probes.push_back({"g2", 1, 1});
    const Spectral a(0, 0);
    for (const Probe& p : probes) {
      CartanData cd = fixture_cartan(p.cartan);
      const YPolynomial& chi = kr_qchar(cd, p.i, p.r, a);
      Monomial top = kr_top(cd, p.i, p.r, a);
      for (const auto& [mm, mult] : chi) {
        if (mm == top) continue;
        ++cases;
        if (!cone_member(cd, top, mm))
          return fail("a character monomial escapes the cone of the top");
        ++cases;
        if (!is_right_negative(cd, mm))
          return fail("a non-top string-module monomial is not right-negative");
      }
    }
  }

  // symmetrizer constraints on randomly generated admissible matrices: the
  // matrices are random trees with unit or wide edges, symmetrizable by
  // construction, filtered by the admissibility requirement
  {
    int admissible_seen = 0;
    for (int t = 0; t < 400; ++t) {
      int n = rand_int(2, 3);
      std::vector<std::vector<long>> C((size_t)n, std::vector<long>((size_t)n, 0));
      for (int i = 0; i < n; ++i) C[(size_t)i][(size_t)i] = 2;
      for (int e = 1; e < n; ++e) {
        int kind = rand_int(0, 2);
        int p = rand_int(2, 5);
        int i = e - 1, j = e;  // path edges
        if (kind == 0) {
          C[(size_t)i][(size_t)j] = C[(size_t)j][(size_t)i] = -1;
        } else if (kind == 1) {
          C[(size_t)i][(size_t)j] = -p;
          C[(size_t)j][(size_t)i] = -1;
        } else {
          C[(size_t)i][(size_t)j] = -1;
          C[(size_t)j][(size_t)i] = -p;
        }
      }
      CartanData cd = CartanData::from_matrix(C);
      if (!cd.admissible()) continue;
      ++admissible_seen;
      ++cases;
      if (!symmetrizer_constraints_ok(cd))
        return fail("symmetrizer constraints fail on an admissible matrix");
    }
    if (admissible_seen < 100) {
      why << "random matrix generation produced too few admissible cases (" << admissible_seen
          << ")\n";
      return false;
    }
  }

  if (cases < 1000) {
    why << "only " << cases << " randomized checks ran\n";
    return false;
  }
  why << "randomized checks: " << cases << "\n";  // informational; shown only on failure
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double limit_s;  // 0 = no stated bound
    std::function<bool(std::ostream&)> fn;
  };
  std::vector<Criterion> criteria = {
      {"fusion coefficients match the closed-form tables", 5.0, crit1_fusion_coefficients},
      {"fusion pair tables, integral forms, intertwiner", 10.0, crit2_pair_tables},
      {"twisted coassociativity on five triples", 30.0, crit3_coassociativity},
      {"relation certificate across the corpus", 60.0, crit4_relations},
      {"q-character multiplicativity", 0.0, crit5_multiplicativity},
      {"monomial expansion equals module characters", 0.0, crit6_oracle_equivalence},
      {"specialness and simplicity structure", 0.0, crit7_specialness},
      {"generalized T-systems with splitting terms", 600.0, crit8_tsystems},
      {"Q-systems under weight restriction", 0.0, crit9_qsystems},
      {"asymptotic stabilization of normalized characters", 0.0, crit10_asymptotics},
      {"randomized monomial-calculus property suite", 0.0, crit11_property_suite},
  };

  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream detail;
    bool ok = false;
    std::string err;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && criteria[i].limit_s > 0 && secs > criteria[i].limit_s) {
      ok = false;
      detail << "time limit exceeded: " << secs << " s > " << criteria[i].limit_s << " s\n";
    }
    std::printf("criterion %2zu: %s  (%7.2f s)  %s\n", i + 1, ok ? "pass" : "FAIL", secs,
                criteria[i].label);
    if (!ok) {
      if (!err.empty()) std::printf("              error: %s\n", err.c_str());
      std::istringstream lines(detail.str());
      std::string line;
      while (std::getline(lines, line)) std::printf("              %s\n", line.c_str());
    }
    all = all && ok;
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
