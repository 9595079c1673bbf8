#include "qaf/module.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qaf {

namespace {

long int_coord(const mpq_class& x, const char* what) {
  if (x.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral coroot pairing");
  if (!x.get_num().fits_slong_p()) throw std::logic_error(std::string(what) + ": pairing overflow");
  return x.get_num().get_si();
}

std::vector<RatQU> unit_vec(int dim, int idx) {
  std::vector<RatQU> v((size_t)dim, RatQU::zero());
  v[(size_t)idx] = RatQU::one();
  return v;
}

// incremental echelon span over Q(q)(u)
struct SpanBuilder {
  std::vector<std::vector<RatQU>> rows;
  std::vector<int> leads;

  bool insert(std::vector<RatQU> w) {
    for (size_t k = 0; k < rows.size(); ++k) {
      RatQU f = w[(size_t)leads[k]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < w.size(); ++j) w[j] -= f * rows[k][j];
    }
    int lead = -1;
    for (size_t j = 0; j < w.size(); ++j)
      if (!w[j].is_zero()) {
        lead = (int)j;
        break;
      }
    if (lead < 0) return false;
    RatQU inv = w[(size_t)lead].inv();
    for (auto& x : w) x *= inv;
    rows.push_back(std::move(w));
    leads.push_back(lead);
    return true;
  }
};

// all component matrices acting on the module: every signature matrix of the
// raising/lowering/loop-Cartan families plus the Cartan diagonals
std::vector<Mat<RatQU>> component_matrices(ExplicitModule& m) {
  std::vector<Mat<RatQU>> out;
  for (int i = 0; i < m.cd.n; ++i) {
    for (const auto& [s, mm] : m.xp[(size_t)i].terms()) out.push_back(mm);
    for (const auto& [s, mm] : m.xm[(size_t)i].terms()) out.push_back(mm);
    for (const auto& [s, mm] : phi_family(m, i, true).terms()) out.push_back(mm);
    for (const auto& [s, mm] : phi_family(m, i, false).terms()) out.push_back(mm);
    out.push_back(k_matrix(m, i, +1));
  }
  return out;
}

}  // namespace

Mat<RatQU> k_matrix(const ExplicitModule& m, int i, int sign) {
  Mat<RatQU> k(m.dim, m.dim);
  for (int v = 0; v < m.dim; ++v) {
    long c = int_coord(m.wt[(size_t)v][(size_t)i], "k_matrix");
    k.at(v, v) = RatQU(RatQ::q_pow(sign * m.cd.ri(i) * c));
  }
  return k;
}

const ExpPolyFamily& phi_family(ExplicitModule& m, int i, bool plus) {
  auto& cache = plus ? m.phip : m.phim;
  if ((int)cache.size() != m.cd.n) {
    if (!m.phi_diagonal)
      throw std::logic_error("phi_family: no diagonal series and no stored families");
    cache.clear();
    for (int j = 0; j < m.cd.n; ++j)
      cache.push_back(plus ? plus_family(m.phi[(size_t)j]) : minus_family(m.phi[(size_t)j]));
  }
  return cache[(size_t)i];
}

Mat<RatQU> phi_mode(ExplicitModule& m, int i, bool plus, long mode) {
  if (plus) {
    if (mode < 0) return Mat<RatQU>(m.dim, m.dim);
    if (mode == 0) return k_matrix(m, i, +1);
    return phi_family(m, i, true).eval(mode);
  }
  if (mode > 0) return Mat<RatQU>(m.dim, m.dim);
  if (mode == 0) return k_matrix(m, i, -1);
  return phi_family(m, i, false).eval(-mode);
}

ExplicitModule kr_sl2(int r, const Spectral& a) {
  if (r < 0) throw std::invalid_argument("kr_sl2: negative level");
  ExplicitModule m;
  m.cd = CartanData::from_matrix({{2}});
  m.base_field = "Q(q)";
  m.dim = r + 1;
  m.grade = 1;
  m.phi_diagonal = true;
  m.xp.assign(1, ExpPolyFamily(m.dim, m.dim));
  m.xm.assign(1, ExpPolyFamily(m.dim, m.dim));
  m.phi.assign(1, {});
  for (int j = 0; j <= r; ++j) {
    m.wt.push_back(WeightVector{mpq_class(r - 2 * j)});
    m.label.push_back("v" + std::to_string(j));
    if (j >= 1)
      m.xp[0].add({a.value() * RatQ::q_pow(r - 2 * j + 2), 0, 0}, j - 1, j,
                  RatQU(RatQ::qint(r - j + 1)));
    if (j < r)
      m.xm[0].add({a.value() * RatQ::q_pow(r - 2 * j), 0, 0}, j + 1, j,
                  RatQU(RatQ::qint(j + 1)));
    PhiSeries phi(RatQU(RatQ::q_pow(r - 2 * j)));
    phi.add_factor(UPoint(a.shifted(-r), 0), +1);
    phi.add_factor(UPoint(a.shifted(r + 2), 0), +1);
    phi.add_factor(UPoint(a.shifted(r - 2 * j + 2), 0), -1);
    phi.add_factor(UPoint(a.shifted(r - 2 * j), 0), -1);
    m.phi[0].push_back(phi);
  }
  m.xp[0].prune();
  m.xm[0].prune();
  return m;
}

ExplicitModule kr_sl2_string(int r, const Spectral& a) {
  // left-aligned string a, aq^2, ..., aq^{2(r-1)} = centered string at aq^{r-1}
  return kr_sl2(r, a.shifted(r - 1));
}

ExplicitModule fundamental_L(const CartanData& cd, const WeightVector& lambda) {
  if ((int)lambda.size() != cd.wdim())
    throw std::invalid_argument("fundamental_L: weight length mismatch");
  for (int i = 0; i < cd.n; ++i)
    if (cd.pair_coroot(lambda, i) != 0)
      throw std::invalid_argument("fundamental_L: weight must pair to zero with every coroot");
  ExplicitModule m;
  m.cd = cd;
  m.base_field = "Q(q)";
  m.dim = 1;
  m.grade = 1;
  m.wt = {lambda};
  m.label = {"v0"};
  m.phi_diagonal = true;
  m.xp.assign((size_t)cd.n, ExpPolyFamily(1, 1));
  m.xm.assign((size_t)cd.n, ExpPolyFamily(1, 1));
  m.phi.assign((size_t)cd.n, {PhiSeries(RatQU::one())});
  return m;
}

ExplicitModule trivial_module(const CartanData& cd) { return fundamental_L(cd, cd.wv_zero()); }

RelationReport verify_relations(ExplicitModule& m, int window) {
  RelationReport rep;
  auto note = [&](const std::string& s) {
    rep.ok = false;
    if (rep.violations.size() < 30) rep.violations.push_back(s);
  };
  const int n = m.cd.n;
  if ((int)m.xp.size() != n || (int)m.xm.size() != n) {
    note("family count does not match the Cartan size");
    return rep;
  }

  // weight grading of every component
  for (int i = 0; i < n; ++i) {
    WeightVector alpha = m.cd.simple_root(i);
    for (int sgn : {+1, -1}) {
      const auto& fam = sgn > 0 ? m.xp[(size_t)i] : m.xm[(size_t)i];
      for (const auto& [sig, mat] : fam.terms())
        for (int w = 0; w < m.dim; ++w)
          for (int v = 0; v < m.dim; ++v) {
            if (mat.at(w, v).is_zero()) continue;
            WeightVector diff = wv_sub(m.wt[(size_t)w], m.wt[(size_t)v]);
            WeightVector want = sgn > 0 ? alpha : wv_scale(alpha, mpq_class(-1));
            if (diff != want)
              note("grading violated: node " + std::to_string(i) + (sgn > 0 ? " raising" : " lowering") +
                   " entry (" + std::to_string(w) + "," + std::to_string(v) + ")");
          }
    }
    if (!m.phi_diagonal) {
      for (bool plus : {true, false})
        for (const auto& [sig, mat] : phi_family(m, i, plus).terms())
          for (int w = 0; w < m.dim; ++w)
            for (int v = 0; v < m.dim; ++v)
              if (!mat.at(w, v).is_zero() && m.wt[(size_t)w] != m.wt[(size_t)v])
                note("loop-Cartan family not weight-preserving: node " + std::to_string(i));
    }
  }
  if (!rep.ok) return rep;

  // widen the grid to certify the exponential-polynomial identities
  int W = window;
  for (int i = 0; i < n; ++i) {
    W = std::max(W, family_order(m.xp[(size_t)i]) + 2);
    W = std::max(W, family_order(m.xm[(size_t)i]) + 2);
    W = std::max(W, family_order(phi_family(m, i, true)) + 2);
    W = std::max(W, family_order(phi_family(m, i, false)) + 2);
  }

  // cached mode grids
  std::vector<std::vector<Mat<RatQU>>> XP((size_t)n), XM((size_t)n), PP((size_t)n), PM((size_t)n);
  for (int i = 0; i < n; ++i) {
    for (long R = -W; R <= W; ++R) {
      XP[(size_t)i].push_back(m.xp[(size_t)i].eval(R));
      XM[(size_t)i].push_back(m.xm[(size_t)i].eval(R));
    }
    for (long M = 0; M <= 2 * W; ++M) {
      PP[(size_t)i].push_back(phi_mode(m, i, true, M));
      PM[(size_t)i].push_back(phi_mode(m, i, false, -M));
    }
  }
  const Mat<RatQU> zero_mat(m.dim, m.dim);
  auto xp_at = [&](int i, long R) -> const Mat<RatQU>& { return XP[(size_t)i][(size_t)(R + W)]; };
  auto xm_at = [&](int i, long R) -> const Mat<RatQU>& { return XM[(size_t)i][(size_t)(R + W)]; };
  auto pp_at = [&](int i, long M) -> const Mat<RatQU>& {  // phi^+ mode M
    return M < 0 ? zero_mat : PP[(size_t)i][(size_t)M];
  };
  auto pm_at = [&](int i, long M) -> const Mat<RatQU>& {  // phi^- mode M (M <= 0)
    return M > 0 ? zero_mat : PM[(size_t)i][(size_t)(-M)];
  };

  // raising against lowering: commutator pairs to the loop-Cartan difference
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = 0; j < n; ++j) {
      RatQ qi = RatQ::q_pow(m.cd.ri(i));
      RatQU denom = RatQU(qi - qi.inv());
      for (long R = -W; R <= W; ++R)
        for (long S = -W; S <= W; ++S) {
          Mat<RatQU> lhs = xp_at(i, R) * xm_at(j, S) - xm_at(j, S) * xp_at(i, R);
          Mat<RatQU> rhs(m.dim, m.dim);
          if (i == j) rhs = (pp_at(i, R + S) - pm_at(i, R + S)).scaled(denom.inv());
          if (!(lhs == rhs)) {
            note("pairing relation fails: i=" + std::to_string(i) + " j=" + std::to_string(j) +
                 " R=" + std::to_string(R) + " S=" + std::to_string(S));
            R = S = W + 1;  // one report per node pair
          }
        }
    }

  // quadratic exchange relation within the raising (resp. lowering) modes
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = 0; j < n; ++j)
      for (int sgn : {+1, -1}) {
        long B = m.cd.ri(i) * m.cd.C[(size_t)i][(size_t)j];
        RatQU f = RatQU(RatQ::q_pow(sgn * B));
        auto X = [&](int node, long R) -> const Mat<RatQU>& { return sgn > 0 ? xp_at(node, R) : xm_at(node, R); };
        for (long R = -W + 1; R <= W && rep.ok; ++R)
          for (long S = -W + 1; S <= W; ++S) {
            Mat<RatQU> t = X(i, R) * X(j, S - 1) - (X(i, R - 1) * X(j, S)).scaled(f) -
                           (X(j, S - 1) * X(i, R)).scaled(f) + X(j, S) * X(i, R - 1);
            if (!t.is_zero()) {
              note("exchange relation fails: i=" + std::to_string(i) + " j=" + std::to_string(j) +
                   " sign=" + std::to_string(sgn) + " R=" + std::to_string(R) +
                   " S=" + std::to_string(S));
              R = S = W + 1;
            }
          }
      }

  // loop-Cartan modes against raising/lowering modes (both expansions)
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = 0; j < n; ++j)
      for (int sgn : {+1, -1}) {
        long B = m.cd.ri(i) * m.cd.C[(size_t)i][(size_t)j];
        RatQU f = RatQU(RatQ::q_pow(sgn * B));
        auto X = [&](int node, long R) -> const Mat<RatQU>& { return sgn > 0 ? xp_at(node, R) : xm_at(node, R); };
        for (long M = 0; M <= W && rep.ok; ++M)
          for (long N = -W + 1; N <= W; ++N) {
            Mat<RatQU> t = pp_at(i, M) * X(j, N - 1) - (pp_at(i, M - 1) * X(j, N)).scaled(f) -
                           (X(j, N - 1) * pp_at(i, M)).scaled(f) + X(j, N) * pp_at(i, M - 1);
            if (!t.is_zero()) {
              note("plus-series exchange fails: i=" + std::to_string(i) + " j=" + std::to_string(j) +
                   " sign=" + std::to_string(sgn) + " M=" + std::to_string(M) +
                   " N=" + std::to_string(N));
              M = N = W + 1;
            }
          }
        for (long M = -1; M <= W && rep.ok; ++M)
          for (long N = -W + 1; N <= W; ++N) {
            Mat<RatQU> t = (pm_at(i, -M - 1) * X(j, N)).scaled(f) - pm_at(i, -M) * X(j, N - 1) -
                           X(j, N) * pm_at(i, -M - 1) + (X(j, N - 1) * pm_at(i, -M)).scaled(f);
            if (!t.is_zero()) {
              note("minus-series exchange fails: i=" + std::to_string(i) + " j=" + std::to_string(j) +
                   " sign=" + std::to_string(sgn) + " M=" + std::to_string(M) +
                   " N=" + std::to_string(N));
              M = N = W + 1;
            }
          }
      }

  // redundant cross-check through the logarithmic modes, diagonal series only:
  // eigenvalue differences across a transition must match the structure
  // constant of the logarithmic-mode commutator
  if (m.phi_diagonal && rep.ok) {
    for (int i = 0; i < n; ++i) {
      RatQ qi = RatQ::q_pow(m.cd.ri(i));
      RatQ qdiff = qi - qi.inv();
      auto hval = [&](int vtx, long md) {
        RatQU s = RatQU::zero();
        for (const auto& [pt, e] : m.phi[(size_t)i][(size_t)vtx].factors())
          s += RatQU::integer(e) * pt.value().pow(md);
        return -(s / RatQU(RatQ::integer(md) * qdiff));
      };
      for (int j = 0; j < n; ++j) {
        long B = m.cd.ri(i) * m.cd.C[(size_t)i][(size_t)j];
        for (int sgn : {+1, -1}) {
          const auto& fam = sgn > 0 ? m.xp[(size_t)j] : m.xm[(size_t)j];
          for (const auto& [sig, mat] : fam.terms()) {
            if (sig.mdeg != 0) continue;
            RatQU base = RatQU(sig.base) * RatQU::u_pow(sig.uexp);
            for (int w = 0; w < m.dim; ++w)
              for (int v = 0; v < m.dim; ++v) {
                if (mat.at(w, v).is_zero()) continue;
                for (long md = 1; md <= 3; ++md) {
                  RatQU lhs = hval(w, md) - hval(v, md);
                  RatQU rhs = base.pow(md) * RatQU(RatQ::qint(md * B) / RatQ::integer(md));
                  if (sgn < 0) rhs = -rhs;
                  if (lhs != rhs)
                    note("logarithmic-mode commutator fails: i=" + std::to_string(i) +
                         " j=" + std::to_string(j) + " entry (" + std::to_string(w) + "," +
                         std::to_string(v) + ") mode " + std::to_string(md));
                }
              }
          }
        }
      }
    }
  }
  return rep;
}

std::vector<LClass> lweight_decomposition(ExplicitModule& m) {
  std::vector<LClass> out;
  if (m.phi_diagonal) {
    for (int v = 0; v < m.dim; ++v) {
      std::vector<PhiSeries> prof;
      for (int i = 0; i < m.cd.n; ++i) prof.push_back(m.phi[(size_t)i][(size_t)v]);
      LClass* hit = nullptr;
      for (auto& c : out)
        if (c.wt == m.wt[(size_t)v] && c.profile == prof) {
          hit = &c;
          break;
        }
      if (!hit) {
        out.push_back(LClass{m.wt[(size_t)v], prof, 0, {}, {}});
        hit = &out.back();
      }
      hit->mult += 1;
      hit->members.push_back(v);
      hit->space.push_back(unit_vec(m.dim, v));
    }
    return out;
  }

  if (m.cand.empty())
    throw std::logic_error("lweight_decomposition: no diagonal series and no candidate spectrum");
  if ((int)m.cand.size() != m.dim)
    throw std::logic_error("lweight_decomposition: candidate count does not match the dimension");

  // group the candidate multiset into distinct classes
  int F = 1;
  for (const auto& c : m.cand) {
    int fc = 0;
    for (const auto& ph : c.phi)
      for (const auto& [pt, e] : ph.factors()) fc += std::abs(e);
    F = std::max(F, fc);
    LClass* hit = nullptr;
    for (auto& k : out)
      if (k.wt == c.wt && k.profile == c.phi) {
        hit = &k;
        break;
      }
    if (!hit) {
      out.push_back(LClass{c.wt, c.phi, 0, {}, {}});
      hit = &out.back();
    }
    hit->mult += 1;
  }
  const long G = 2 * F + 2;

  // certify the candidate spectrum: characteristic polynomials per mode
  for (int i = 0; i < m.cd.n; ++i)
    for (bool plus : {true, false})
      for (long md = 1; md <= G; ++md) {
        Mat<RatQU> A = phi_family(m, i, plus).eval(md);
        std::vector<RatQU> cp = charpoly(A);
        std::vector<RatQU> want{RatQU::one()};
        for (const auto& c : out) {
          RatQU psi = plus ? c.profile[(size_t)i].coef_plus(md) : c.profile[(size_t)i].coef_minus(md);
          for (int t = 0; t < c.mult; ++t) {
            std::vector<RatQU> nxt((size_t)want.size() + 1, RatQU::zero());
            for (size_t k = 0; k < want.size(); ++k) {
              nxt[k + 1] += want[k];
              nxt[k] -= psi * want[k];
            }
            want = std::move(nxt);
          }
        }
        if (cp != want)
          throw std::logic_error(
              "lweight_decomposition: candidate spectrum contradicts a characteristic polynomial");
      }

  // carve out the joint generalized eigenspaces
  int total = 0;
  for (auto& c : out) {
    std::vector<Mat<RatQU>> blocks;
    for (int i = 0; i < m.cd.n; ++i)
      for (long md = 1; md <= G; ++md) {
        Mat<RatQU> A = phi_family(m, i, true).eval(md);
        RatQU psi = c.profile[(size_t)i].coef_plus(md);
        for (int d = 0; d < m.dim; ++d) A.at(d, d) -= psi;
        Mat<RatQU> P = Mat<RatQU>::identity(m.dim);
        for (int t = 0; t < m.dim; ++t) P = P * A;
        blocks.push_back(P);
      }
    Mat<RatQU> stacked((int)blocks.size() * m.dim, m.dim);
    for (size_t b = 0; b < blocks.size(); ++b)
      for (int i2 = 0; i2 < m.dim; ++i2)
        for (int j2 = 0; j2 < m.dim; ++j2) stacked.at((int)b * m.dim + i2, j2) = blocks[b].at(i2, j2);
    c.space = kernel(stacked);
    if ((int)c.space.size() != c.mult)
      throw std::logic_error("lweight_decomposition: class space dimension mismatch");
    for (const auto& vec : c.space)
      for (int idx = 0; idx < m.dim; ++idx)
        if (!vec[(size_t)idx].is_zero() && m.wt[(size_t)idx] != c.wt)
          throw std::logic_error("lweight_decomposition: class space not weight-homogeneous");
    total += c.mult;
  }
  if (total != m.dim) throw std::logic_error("lweight_decomposition: multiplicities do not fill the module");
  return out;
}

YPolynomial qcharacter(ExplicitModule& m) {
  auto classes = lweight_decomposition(m);
  bool over_u = m.base_field == "Q(q)(u)";

  struct Merged {
    WeightVector wt;
    std::vector<PhiSeries> prof;
    long mult;
  };
  std::vector<Merged> merged;
  for (const auto& c : classes) {
    std::vector<PhiSeries> prof;
    for (const auto& p : c.profile) {
      if (over_u)
        prof.push_back(p.specialize_u1());
      else {
        if (!p.u_free()) throw std::logic_error("qcharacter: u-dependent series over Q(q)");
        prof.push_back(p);
      }
    }
    Merged* hit = nullptr;
    for (auto& g : merged)
      if (g.wt == c.wt && g.prof == prof) {
        hit = &g;
        break;
      }
    if (!hit) {
      merged.push_back(Merged{c.wt, prof, 0});
      hit = &merged.back();
    }
    hit->mult += c.mult;
  }

  YPolynomial chi;
  for (const auto& g : merged) {
    LWeight lw = lweight_of_profiles(m.cd, g.wt, g.prof);
    Monomial mono = monomial_of_lweight(m.cd, lw);
    ypoly_add_term(chi, mono, g.mult);
  }
  return chi;
}

int generated_dim(ExplicitModule& m, const std::vector<RatQU>& v) {
  auto comps = component_matrices(m);
  SpanBuilder span;
  std::deque<std::vector<RatQU>> work;
  if (span.insert(v)) work.push_back(span.rows.back());
  while (!work.empty()) {
    auto w = work.front();
    work.pop_front();
    for (const auto& mm : comps) {
      auto y = mm.apply(w);
      if (span.insert(y)) work.push_back(span.rows.back());
    }
  }
  return (int)span.rows.size();
}

bool is_invariant_coordinate_subspace(ExplicitModule& m, const std::vector<int>& idxs) {
  std::vector<bool> in((size_t)m.dim, false);
  for (int i : idxs) in[(size_t)i] = true;
  for (const auto& mm : component_matrices(m))
    for (int v : idxs)
      for (int w = 0; w < m.dim; ++w)
        if (!mm.at(w, v).is_zero() && !in[(size_t)w]) return false;
  return true;
}

bool is_lhw(ExplicitModule& m, const std::vector<RatQU>& v) {
  for (int i = 0; i < m.cd.n; ++i)
    for (const auto& [sig, mat] : m.xp[(size_t)i].terms()) {
      auto y = mat.apply(v);
      for (const auto& x : y)
        if (!x.is_zero()) return false;
    }
  return generated_dim(m, v) == m.dim;
}

bool is_lhw(ExplicitModule& m, int idx) { return is_lhw(m, unit_vec(m.dim, idx)); }

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b) {
  if (a.cd.C != b.cd.C || a.base_field != b.base_field)
    throw std::invalid_argument("direct_sum: incompatible summands");
  if (!a.phi_diagonal || !b.phi_diagonal)
    throw std::invalid_argument("direct_sum: summands must carry diagonal loop-Cartan series");
  ExplicitModule out;
  out.cd = a.cd;
  out.base_field = a.base_field;
  out.dim = a.dim + b.dim;
  out.grade = std::max(a.grade, b.grade);
  out.phi_diagonal = true;
  out.wt = a.wt;
  out.wt.insert(out.wt.end(), b.wt.begin(), b.wt.end());
  for (const auto& l : a.label) out.label.push_back(l);
  for (const auto& l : b.label) out.label.push_back(l + "'");
  auto embed = [&](const Mat<RatQU>& m, int off) {
    Mat<RatQU> e(out.dim, out.dim);
    for (int i = 0; i < m.r; ++i)
      for (int j = 0; j < m.c; ++j) e.at(i + off, j + off) = m.at(i, j);
    return e;
  };
  for (int i = 0; i < out.cd.n; ++i) {
    ExpPolyFamily fp(out.dim, out.dim), fm(out.dim, out.dim);
    for (const auto& [s, m] : a.xp[(size_t)i].terms()) fp.add_term(s, embed(m, 0));
    for (const auto& [s, m] : b.xp[(size_t)i].terms()) fp.add_term(s, embed(m, a.dim));
    for (const auto& [s, m] : a.xm[(size_t)i].terms()) fm.add_term(s, embed(m, 0));
    for (const auto& [s, m] : b.xm[(size_t)i].terms()) fm.add_term(s, embed(m, a.dim));
    fp.prune();
    fm.prune();
    out.xp.push_back(fp);
    out.xm.push_back(fm);
    std::vector<PhiSeries> col = a.phi[(size_t)i];
    col.insert(col.end(), b.phi[(size_t)i].begin(), b.phi[(size_t)i].end());
    out.phi.push_back(col);
  }
  return out;
}

bool is_intertwiner(ExplicitModule& a, ExplicitModule& b, const Mat<RatQU>& s) {
  if (s.r != b.dim || s.c != a.dim) return false;
  for (int w = 0; w < b.dim; ++w)
    for (int v = 0; v < a.dim; ++v)
      if (!s.at(w, v).is_zero() && b.wt[(size_t)w] != a.wt[(size_t)v]) return false;
  Mat<RatQU> ida = Mat<RatQU>::identity(a.dim);
  Mat<RatQU> idb = Mat<RatQU>::identity(b.dim);
  for (int i = 0; i < a.cd.n; ++i) {
    if (!(a.xp[(size_t)i].conjugated(s, ida) == b.xp[(size_t)i].conjugated(idb, s))) return false;
    if (!(a.xm[(size_t)i].conjugated(s, ida) == b.xm[(size_t)i].conjugated(idb, s))) return false;
    if (!(phi_family(a, i, true).conjugated(s, ida) ==
          phi_family(b, i, true).conjugated(idb, s)))
      return false;
    if (!(phi_family(a, i, false).conjugated(s, ida) ==
          phi_family(b, i, false).conjugated(idb, s)))
      return false;
    if (!(s * k_matrix(a, i, +1) == k_matrix(b, i, +1) * s)) return false;
  }
  return true;
}

Simplicity is_simple_criterion(ExplicitModule& m) {
  std::vector<LClass> classes;
  try {
    classes = lweight_decomposition(m);
  } catch (const std::exception&) {
    return Simplicity::Inconclusive;
  }
  for (const auto& c : classes)
    if (c.mult != 1) return Simplicity::Inconclusive;

  const int nc = (int)classes.size();
  Mat<RatQU> P(m.dim, nc);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < m.dim; ++i) P.at(i, c) = classes[(size_t)c].space[0][(size_t)i];
  auto Pinv = inverse(P);
  if (!Pinv) return Simplicity::Inconclusive;

  std::vector<std::vector<bool>> adj((size_t)nc, std::vector<bool>((size_t)nc, false));
  for (int i = 0; i < m.cd.n; ++i)
    for (int sgn : {+1, -1}) {
      const auto& fam = sgn > 0 ? m.xp[(size_t)i] : m.xm[(size_t)i];
      for (const auto& [sig, mat] : fam.terms()) {
        Mat<RatQU> T = (*Pinv) * mat * P;
        for (int c = 0; c < nc; ++c)
          for (int d = 0; d < nc; ++d)
            if (c != d && !T.at(d, c).is_zero()) adj[(size_t)c][(size_t)d] = true;
      }
    }

  auto reach = [&](bool forward) {
    std::vector<bool> seen((size_t)nc, false);
    std::deque<int> work{0};
    seen[0] = true;
    int count = 1;
    while (!work.empty()) {
      int c = work.front();
      work.pop_front();
      for (int d = 0; d < nc; ++d) {
        bool edge = forward ? adj[(size_t)c][(size_t)d] : adj[(size_t)d][(size_t)c];
        if (edge && !seen[(size_t)d]) {
          seen[(size_t)d] = true;
          ++count;
          work.push_back(d);
        }
      }
    }
    return count == nc;
  };
  return reach(true) && reach(false) ? Simplicity::Simple : Simplicity::NotSimple;
}

}  // namespace qaf
