#include "qaf/aform.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace qaf {

namespace {

RatQU one_minus_u_pow(long e) { return (RatQU::one() - RatQU::u_pow(1)).pow(e); }
RatQU u_minus_one_pow(long e) { return (RatQU::u_pow(1) - RatQU::one()).pow(e); }

// canonical representative of x modulo (u-1)^e A: the Laurent polynomial in
// t = u-1 collecting every term of degree < e
RatQU laurent_below(const RatQU& x, long e) {
  if (x.is_zero()) return RatQU::zero();
  long w = x.u1_valuation();
  if (w >= e) return RatQU::zero();
  RatQU unit = x / u_minus_one_pow(w);
  std::vector<RatQ> tay = unit.taylor_u1((int)(e - w - 1));
  RatQU res = RatQU::zero();
  for (size_t k = 0; k < tay.size(); ++k)
    if (!tay[k].is_zero()) res += RatQU(tay[k]) * u_minus_one_pow(w + (long)k);
  return res;
}

WeightVector row_weight(const ExplicitModule& amb, const std::vector<RatQU>& row) {
  const WeightVector* w = nullptr;
  for (int c = 0; c < amb.dim; ++c) {
    if (row[(size_t)c].is_zero()) continue;
    if (!w)
      w = &amb.wt[(size_t)c];
    else if (!(*w == amb.wt[(size_t)c]))
      throw std::logic_error("ALattice: basis vector is not weight-homogeneous");
  }
  if (!w) throw std::logic_error("ALattice: zero basis vector");
  return *w;
}

bool all_zero(const std::vector<RatQU>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

ALattice make_lattice(const ExplicitModule& ambient, const std::vector<std::vector<RatQU>>& gens) {
  const int dim = ambient.dim;
  std::vector<std::vector<RatQU>> active;
  for (const auto& g : gens) {
    if ((int)g.size() != dim) throw std::invalid_argument("make_lattice: vector length mismatch");
    if (!all_zero(g)) active.push_back(g);
  }
  std::vector<std::vector<RatQU>> placed;
  std::vector<int> pcols;
  std::vector<long> pvals;

  for (int col = 0; col < dim; ++col) {
    long best = LONG_MAX;
    int bi = -1;
    for (size_t i = 0; i < active.size(); ++i) {
      if (active[i][(size_t)col].is_zero()) continue;
      long v = active[i][(size_t)col].u1_valuation();
      if (v < best) {
        best = v;
        bi = (int)i;
      }
    }
    if (bi < 0) continue;
    std::vector<RatQU> row = active[(size_t)bi];
    active.erase(active.begin() + bi);

    RatQU unit = one_minus_u_pow(best) / row[(size_t)col];
    for (auto& x : row) x *= unit;

    // clear the column in the remaining rows (their valuation is >= best)
    for (auto& r2 : active) {
      if (r2[(size_t)col].is_zero()) continue;
      RatQU f = r2[(size_t)col] / row[(size_t)col];
      for (int j = 0; j < dim; ++j) r2[(size_t)j] -= f * row[(size_t)j];
    }
    active.erase(std::remove_if(active.begin(), active.end(), all_zero), active.end());

    // reduce the residues above the new pivot
    for (auto& pr : placed) {
      const RatQU& x = pr[(size_t)col];
      if (x.is_zero()) continue;
      RatQU res = laurent_below(x, best);
      RatQU f = (x - res) / row[(size_t)col];
      if (f.is_zero()) continue;
      for (int j = 0; j < dim; ++j) pr[(size_t)j] -= f * row[(size_t)j];
    }
    placed.push_back(std::move(row));
    pcols.push_back(col);
    pvals.push_back(best);
  }
  if (!active.empty()) throw std::logic_error("make_lattice: elimination left a stray row");

  ALattice out{ambient, std::move(placed), std::move(pcols), std::move(pvals)};
  for (const auto& r : out.basis) row_weight(ambient, r);  // homogeneity invariant
  return out;
}

ALattice cyclic_aform(ExplicitModule& v_module, const std::vector<RatQU>& v) {
  std::vector<Mat<RatQU>> blocks;
  for (int i = 0; i < v_module.cd.n; ++i) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      const ExpPolyFamily& f = sgn == 0 ? v_module.xp[(size_t)i] : v_module.xm[(size_t)i];
      int S = family_order(f);
      for (long m = 0; m < S; ++m) blocks.push_back(f.eval(m));
    }
    for (bool plus : {true, false}) {
      const ExpPolyFamily& f = phi_family(v_module, i, plus);
      int S = family_order(f);
      for (long m = 1; m <= S; ++m) blocks.push_back(f.eval(m));
    }
  }

  ALattice lat = make_lattice(v_module, {v});
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::vector<RatQU>> next = lat.basis;
    for (const auto& b : lat.basis)
      for (const auto& mm : blocks) next.push_back(mm.apply(b));
    ALattice grown = make_lattice(v_module, next);
    if (grown.basis == lat.basis) return grown;  // the extra pass added nothing
    lat = std::move(grown);
  }
  throw std::runtime_error("cyclic_aform: closure did not stabilize");
}

long n_valuation(const ALattice& lattice, const std::vector<RatQU>& v) {
  std::vector<RatQU> res = v;
  long n = LONG_MIN;
  bool any = false;
  for (size_t k = 0; k < lattice.basis.size(); ++k) {
    const RatQU& pv = lattice.basis[k][(size_t)lattice.pivot_col[k]];
    RatQU c = res[(size_t)lattice.pivot_col[k]] / pv;
    if (c.is_zero()) continue;
    any = true;
    for (size_t j = 0; j < res.size(); ++j) res[j] -= c * lattice.basis[k][j];
    n = std::max(n, -c.u1_valuation());
  }
  if (!all_zero(res)) throw std::invalid_argument("n_valuation: vector outside the lattice span");
  if (!any) throw std::invalid_argument("n_valuation: undefined for the zero vector");
  return n;
}

ALattice lattice_sum(const ALattice& l1, const ALattice& l2) {
  if (l1.ambient.dim != l2.ambient.dim)
    throw std::invalid_argument("lattice_sum: ambient dimensions differ");
  std::vector<std::vector<RatQU>> gens = l1.basis;
  gens.insert(gens.end(), l2.basis.begin(), l2.basis.end());
  return make_lattice(l1.ambient, gens);
}

ExplicitModule specialize_u1(const ALattice& lattice) {
  ExplicitModule amb = lattice.ambient;
  const int dim = amb.dim;
  const int n = amb.cd.n;
  if ((int)lattice.basis.size() != dim)
    throw std::invalid_argument("specialize_u1: lattice does not span the ambient module");
  if (!amb.phi_diagonal)
    throw std::logic_error("specialize_u1: ambient loop-Cartan series must be diagonal");

  Mat<RatQU> P(dim, dim);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i) P.at(i, k) = lattice.basis[(size_t)k][(size_t)i];
  auto Pi = inverse(P);
  if (!Pi) throw std::logic_error("specialize_u1: lattice basis matrix is singular");

  // per-weight rank equals the ambient weight-space dimension
  std::map<WeightVector, std::pair<int, int>> per_weight;
  for (int v = 0; v < dim; ++v) per_weight[amb.wt[(size_t)v]].first += 1;
  std::vector<WeightVector> rw;
  for (const auto& row : lattice.basis) {
    rw.push_back(row_weight(amb, row));
    per_weight[rw.back()].second += 1;
  }
  for (const auto& [w, cnt] : per_weight)
    if (cnt.first != cnt.second)
      throw std::logic_error("specialize_u1: per-weight rank does not match the ambient dimension");

  auto collapse = [&](const ExpPolyFamily& F) -> ExpPolyFamily {
    ExpPolyFamily G(dim, dim);
    if (F.terms().empty()) return G;
    auto sample = [&](long m) -> Mat<RatQU> {
      Mat<RatQU> S = (*Pi) * F.eval(m) * P;
      Mat<RatQU> out(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          if (S.at(i, j).is_zero()) continue;
          if (!S.at(i, j).in_A())
            throw std::logic_error("specialize_u1: conjugated mode matrix leaves the regular ring");
          out.at(i, j) = RatQU(S.at(i, j).eval_u1());
        }
      return out;
    };
    // degree bound per collapsed base: mdeg plus the (1-u)-pole order of the
    // conjugated signature matrix (the binomial expansion of u^{e*m} at u=1)
    ExpPolyFamily conj = F.conjugated(*Pi, P);
    std::map<RatQ, int> degbound;
    for (const auto& [sig, mm] : conj.terms()) {
      long pole = 0;
      bool nonzero = false;
      for (const auto& x : mm.a) {
        if (x.is_zero()) continue;
        nonzero = true;
        pole = std::max(pole, std::max(0L, -x.u1_valuation()));
      }
      if (!nonzero) continue;
      int bound = sig.mdeg + (int)pole;
      auto it = degbound.find(sig.base);
      if (it == degbound.end())
        degbound[sig.base] = bound;
      else
        it->second = std::max(it->second, bound);
    }
    if (degbound.empty()) return G;
    std::vector<ExpPolySig> sigs;
    long K = 0;
    for (const auto& [b, d] : degbound)
      for (int k = 0; k <= d; ++k) {
        sigs.push_back({b, 0, k});
        ++K;
      }
    auto comps = separate_components(sigs, sample, 1);
    for (const auto& [sig, mm] : comps) G.add_term(sig, mm);
    G.prune();
    for (long m = K + 1; m <= K + 3; ++m)
      if (!(G.eval(m) == sample(m)))
        throw std::logic_error("specialize_u1: reconstructed family fails verification");
    return G;
  };

  ExplicitModule out;
  out.cd = amb.cd;
  out.base_field = "Q(q)";
  out.dim = dim;
  out.grade = 1;
  out.wt = rw;
  for (int k = 0; k < dim; ++k)
    out.label.push_back(amb.label[(size_t)lattice.pivot_col[(size_t)k]]);
  out.xp.reserve((size_t)n);
  out.xm.reserve((size_t)n);
  for (int i = 0; i < n; ++i) {
    out.xp.push_back(collapse(amb.xp[(size_t)i]));
    out.xm.push_back(collapse(amb.xm[(size_t)i]));
  }

  // specialized profiles of the ambient basis, grouped
  std::vector<std::vector<PhiSeries>> prof((size_t)dim);
  for (int v = 0; v < dim; ++v)
    for (int i = 0; i < n; ++i) prof[(size_t)v].push_back(amb.phi[(size_t)i][(size_t)v].specialize_u1());
  std::vector<int> group((size_t)dim, -1);
  std::vector<std::pair<WeightVector, std::vector<PhiSeries>>> groups;
  for (int v = 0; v < dim; ++v) {
    for (size_t g = 0; g < groups.size(); ++g)
      if (groups[g].first == amb.wt[(size_t)v] && groups[g].second == prof[(size_t)v]) {
        group[(size_t)v] = (int)g;
        break;
      }
    if (group[(size_t)v] < 0) {
      groups.emplace_back(amb.wt[(size_t)v], prof[(size_t)v]);
      group[(size_t)v] = (int)groups.size() - 1;
    }
  }
  bool diagonal = true;
  std::vector<int> row_group((size_t)dim, -1);
  for (int k = 0; k < dim && diagonal; ++k) {
    for (int v = 0; v < dim; ++v) {
      if (lattice.basis[(size_t)k][(size_t)v].is_zero()) continue;
      if (row_group[(size_t)k] < 0)
        row_group[(size_t)k] = group[(size_t)v];
      else if (row_group[(size_t)k] != group[(size_t)v])
        diagonal = false;
    }
  }
  if (diagonal) {
    out.phi_diagonal = true;
    out.phi.assign((size_t)n, {});
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < dim; ++k)
        out.phi[(size_t)i].push_back(groups[(size_t)row_group[(size_t)k]].second[(size_t)i]);
  } else {
    out.phi_diagonal = false;
    ExplicitModule& ambr = amb;
    for (int i = 0; i < n; ++i) {
      out.phip.push_back(collapse(phi_family(ambr, i, true)));
      out.phim.push_back(collapse(phi_family(ambr, i, false)));
    }
    for (int v = 0; v < dim; ++v)
      out.cand.push_back(CandidateProfile{amb.wt[(size_t)v], prof[(size_t)v]});
  }
  return out;
}

ALattice star_fusion_form(const std::vector<ExplicitModule>& mods) {
  if (mods.empty()) throw std::invalid_argument("star_fusion: no operands");
  for (const auto& m : mods) {
    if (m.base_field != "Q(q)")
      throw std::invalid_argument("star_fusion: operands must be modules over Q(q)");
    ExplicitModule tmp = m;
    if (!is_lhw(tmp, 0))
      throw std::invalid_argument("star_fusion: operand is not l-highest weight at index 0");
  }
  ExplicitModule cur = mods[0];
  for (size_t t = 1; t < mods.size(); ++t) cur = fuse(cur, mods[t], cur.grade);
  std::vector<RatQU> top((size_t)cur.dim, RatQU::zero());
  top[0] = RatQU::one();
  return cyclic_aform(cur, top);
}

ExplicitModule star_fusion(const std::vector<ExplicitModule>& mods) {
  return specialize_u1(star_fusion_form(mods));
}

ALattice tensor_d_form(const ExplicitModule& v1, const ExplicitModule& v2) {
  if (v1.base_field != "Q(q)" || v2.base_field != "Q(q)")
    throw std::invalid_argument("tensor_d: operands must be modules over Q(q)");
  ExplicitModule fused = fuse(v1, v2, v1.grade);
  ALattice acc;
  bool first = true;
  for (int idx = 0; idx < fused.dim; ++idx) {
    std::vector<RatQU> e((size_t)fused.dim, RatQU::zero());
    e[(size_t)idx] = RatQU::one();
    ALattice lk = cyclic_aform(fused, e);
    acc = first ? lk : lattice_sum(acc, lk);
    first = false;
  }
  return acc;
}

ExplicitModule tensor_d(const ExplicitModule& v1, const ExplicitModule& v2) {
  return specialize_u1(tensor_d_form(v1, v2));
}

}  // namespace qaf
