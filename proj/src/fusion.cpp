#include "qaf/fusion.hpp"

#include <stdexcept>

namespace qaf {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int t = 1; t <= k; ++t) b = b * (n - t + 1) / t;
  return b;
}

Mat<RatQU> kron(const Mat<RatQU>& a, const Mat<RatQU>& b) {
  Mat<RatQU> m(a.r * b.r, a.c * b.c);
  for (int i1 = 0; i1 < a.r; ++i1)
    for (int j1 = 0; j1 < a.c; ++j1) {
      if (a.at(i1, j1).is_zero()) continue;
      for (int i2 = 0; i2 < b.r; ++i2)
        for (int j2 = 0; j2 < b.c; ++j2) {
          if (b.at(i2, j2).is_zero()) continue;
          m.at(i1 * b.r + i2, j1 * b.c + j2) = a.at(i1, j1) * b.at(i2, j2);
        }
    }
  return m;
}

RatQU guarded_tail(const RatQU& x, int s) {
  if (x == RatQU::one())
    throw std::runtime_error("fuse: a coproduct tail has ratio 1 and is not summable");
  return tail_sum(x, s);
}

}  // namespace

ExplicitModule fuse(const ExplicitModule& left, const ExplicitModule& right, long power) {
  return fuse(FusionSpec{left, right, power});
}

ExplicitModule fuse(const FusionSpec& spec) {
  ExplicitModule L = spec.left;   // local copies: family caches may be filled
  ExplicitModule R = spec.right;
  const long rho = spec.power;
  if (L.cd.C != R.cd.C || L.cd.r != R.cd.r)
    throw std::invalid_argument("fuse: operands have different Cartan data");
  if (!L.phi_diagonal || !R.phi_diagonal)
    throw std::invalid_argument("fuse: operands must carry diagonal loop-Cartan series");
  if (rho < 0) throw std::invalid_argument("fuse: negative deformation power");

  ExplicitModule out;
  out.cd = L.cd;
  out.base_field = "Q(q)(u)";
  out.dim = L.dim * R.dim;
  out.grade = L.grade + R.grade;
  out.phi_diagonal = true;
  for (int j = 0; j < L.dim; ++j)
    for (int k = 0; k < R.dim; ++k) {
      out.wt.push_back(wv_add(L.wt[(size_t)j], R.wt[(size_t)k]));
      out.label.push_back(L.label[(size_t)j] + "*" + R.label[(size_t)k]);
    }

  const int n = out.cd.n;
  out.xp.assign((size_t)n, ExpPolyFamily(out.dim, out.dim));
  out.xm.assign((size_t)n, ExpPolyFamily(out.dim, out.dim));
  out.phi.assign((size_t)n, {});
  Mat<RatQU> idL = Mat<RatQU>::identity(L.dim);
  Mat<RatQU> idR = Mat<RatQU>::identity(R.dim);

  for (int i = 0; i < n; ++i) {
    // raising series: x(z) (x) 1  +  phi^-(z) (x) x(u^rho z)
    ExpPolyFamily& fp = out.xp[(size_t)i];
    for (const auto& [sig, mat] : L.xp[(size_t)i].terms()) fp.add_term(sig, kron(mat, idR));
    Mat<RatQU> k1inv = k_matrix(L, i, -1);
    for (const auto& [sig, mat] : R.xp[(size_t)i].terms())
      fp.add_term({sig.base, sig.uexp + rho, sig.mdeg}, kron(k1inv, mat));
    for (const auto& [s1, b1] : phi_family(L, i, false).terms())
      for (const auto& [s2, b2] : R.xp[(size_t)i].terms()) {
        RatQU x = RatQU(s1.base * s2.base) * RatQU::u_pow(s1.uexp + s2.uexp + rho);
        Mat<RatQU> kr = kron(b1, b2);
        for (int k = 0; k <= s2.mdeg; ++k) {
          RatQU coeff =
              RatQU::integer(binom(s2.mdeg, k)) * guarded_tail(x, s1.mdeg + s2.mdeg - k);
          fp.add_term({s2.base, s2.uexp + rho, k}, kr.scaled(coeff));
        }
      }
    fp.prune();

    // lowering series: 1 (x) x(u^rho z)  +  x(z) (x) phi^+(u^rho z)
    ExpPolyFamily& fm = out.xm[(size_t)i];
    for (const auto& [sig, mat] : R.xm[(size_t)i].terms())
      fm.add_term({sig.base, sig.uexp + rho, sig.mdeg}, kron(idL, mat));
    Mat<RatQU> k2 = k_matrix(R, i, +1);
    for (const auto& [sig, mat] : L.xm[(size_t)i].terms()) fm.add_term(sig, kron(mat, k2));
    for (const auto& [s1, b1] : L.xm[(size_t)i].terms())
      for (const auto& [s2, b2] : phi_family(R, i, true).terms()) {
        RatQU x = RatQU(s2.base / s1.base) * RatQU::u_pow(rho - s1.uexp + s2.uexp);
        Mat<RatQU> kr = kron(b1, b2);
        for (int k = 0; k <= s1.mdeg; ++k) {
          RatQU coeff = RatQU::integer(binom(s1.mdeg, k)) * guarded_tail(x, s2.mdeg + s1.mdeg - k);
          if ((s1.mdeg - k) % 2 != 0) coeff = -coeff;
          fm.add_term({s1.base, s1.uexp, k}, kr.scaled(coeff));
        }
      }
    fm.prune();

    // loop-Cartan series multiply, right factor shifted
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < R.dim; ++k)
        out.phi[(size_t)i].push_back(L.phi[(size_t)i][(size_t)j] *
                                     R.phi[(size_t)i][(size_t)k].shift_z_u(rho));
  }
  return out;
}

ExplicitModule fuse_with_trivial(const ExplicitModule& v, Side trivial_side) {
  ExplicitModule triv = trivial_module(v.cd);
  ExplicitModule fused = trivial_side == Side::Left ? fuse(triv, v, 0) : fuse(v, triv, 0);
  // the tensor with the one-dimensional trivial factor must reproduce v
  for (int i = 0; i < v.cd.n; ++i) {
    if (!(fused.xp[(size_t)i] == v.xp[(size_t)i]) || !(fused.xm[(size_t)i] == v.xm[(size_t)i]))
      throw std::logic_error("fuse_with_trivial: tensor does not reproduce the operand");
    for (int b = 0; b < v.dim; ++b)
      if (!(fused.phi[(size_t)i][(size_t)b] == v.phi[(size_t)i][(size_t)b]))
        throw std::logic_error("fuse_with_trivial: loop-Cartan series changed");
  }
  return v;
}

namespace {

bool modules_equal(ExplicitModule& a, ExplicitModule& b, int window, std::string* report) {
  auto fail = [&](const std::string& s) {
    if (report) *report = s;
    return false;
  };
  if (a.dim != b.dim) return fail("dimension mismatch");
  for (int v = 0; v < a.dim; ++v)
    if (a.wt[(size_t)v] != b.wt[(size_t)v]) return fail("weight mismatch at basis vector " + std::to_string(v));
  for (int i = 0; i < a.cd.n; ++i) {
    if (!(a.xp[(size_t)i] == b.xp[(size_t)i]))
      return fail("raising families differ at node " + std::to_string(i));
    if (!(a.xm[(size_t)i] == b.xm[(size_t)i]))
      return fail("lowering families differ at node " + std::to_string(i));
    for (int v = 0; v < a.dim; ++v)
      if (!(a.phi[(size_t)i][(size_t)v] == b.phi[(size_t)i][(size_t)v]))
        return fail("loop-Cartan series differ at node " + std::to_string(i) + ", basis vector " +
                    std::to_string(v));
    // secondary certificate: agreement of evaluated modes on the grid
    for (long m = -window; m <= window; ++m) {
      if (!(a.xp[(size_t)i].eval(m) == b.xp[(size_t)i].eval(m)) ||
          !(a.xm[(size_t)i].eval(m) == b.xm[(size_t)i].eval(m)))
        return fail("mode grid mismatch at node " + std::to_string(i) + ", mode " + std::to_string(m));
    }
  }
  return true;
}

}  // namespace

bool check_twisted_coassoc(const ExplicitModule& v1, const ExplicitModule& v2,
                           const ExplicitModule& v3, long r, long rprime, int window,
                           std::string* report) {
  if (r < 1 || rprime < 1) throw std::invalid_argument("check_twisted_coassoc: powers must be >= 1");
  ExplicitModule a = fuse(v1, fuse(v2, v3, rprime), r);
  ExplicitModule b = fuse(fuse(v1, v2, r), v3, r + rprime);
  return modules_equal(a, b, window, report);
}

bool check_untwisted_coassoc(const ExplicitModule& v1, const ExplicitModule& v2,
                             const ExplicitModule& v3, int window) {
  ExplicitModule a = fuse(v1, fuse(v2, v3, 1), 1);
  ExplicitModule b = fuse(fuse(v1, v2, 1), v3, 1);
  return modules_equal(a, b, window, nullptr);
}

bool is_lu_highest_weight(ExplicitModule& fused) {
  // maximal weights in the root-cone order
  std::vector<WeightVector> distinct;
  for (const auto& w : fused.wt) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == w;
    if (!seen) distinct.push_back(w);
  }
  std::vector<WeightVector> maximal;
  for (const auto& mu : distinct) {
    bool dominated = false;
    for (const auto& nu : distinct) {
      if (nu == mu) continue;
      if (in_positive_root_cone(fused.cd, wv_sub(nu, mu))) dominated = true;
    }
    if (!dominated) maximal.push_back(mu);
  }
  if (maximal.size() != 1) return false;
  int idx = -1, count = 0;
  for (int v = 0; v < fused.dim; ++v)
    if (fused.wt[(size_t)v] == maximal[0]) {
      idx = v;
      ++count;
    }
  if (count != 1) return false;
  return is_lhw(fused, idx);
}

}  // namespace qaf
