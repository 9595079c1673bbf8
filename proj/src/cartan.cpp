#include "qaf/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qaf {

namespace {

// rational row-reduction on a copy; returns rank, optionally kernel basis
int q_rank(std::vector<std::vector<mpq_class>> m, int rows, int cols,
           std::vector<std::vector<mpq_class>>* kernel_out) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[(size_t)i][(size_t)col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[(size_t)sel], m[(size_t)row]);
    mpq_class inv = 1 / m[(size_t)row][(size_t)col];
    for (int j = col; j < cols; ++j) m[(size_t)row][(size_t)j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[(size_t)i][(size_t)col] == 0) continue;
      mpq_class f = m[(size_t)i][(size_t)col];
      for (int j = col; j < cols; ++j) m[(size_t)i][(size_t)j] -= f * m[(size_t)row][(size_t)j];
    }
    piv.push_back(col);
    ++row;
  }
  if (kernel_out) {
    kernel_out->clear();
    std::vector<bool> is_piv((size_t)cols, false);
    for (int p : piv) is_piv[(size_t)p] = true;
    for (int f = 0; f < cols; ++f) {
      if (is_piv[(size_t)f]) continue;
      std::vector<mpq_class> v((size_t)cols, mpq_class(0));
      v[(size_t)f] = 1;
      for (size_t pi = 0; pi < piv.size(); ++pi)
        v[(size_t)piv[pi]] = -m[pi][(size_t)f];
      kernel_out->push_back(std::move(v));
    }
  }
  return (int)piv.size();
}

}  // namespace

CartanData CartanData::from_matrix(const std::vector<std::vector<long>>& m) {
  CartanData cd;
  cd.n = (int)m.size();
  if (cd.n == 0) throw std::invalid_argument("cartan: empty matrix");
  for (const auto& row : m)
    if ((int)row.size() != cd.n) throw std::invalid_argument("cartan: not square");
  cd.C = m;
  for (int i = 0; i < cd.n; ++i) {
    if (m[(size_t)i][(size_t)i] != 2) throw std::invalid_argument("cartan: diagonal must be 2");
    for (int j = 0; j < cd.n; ++j) {
      if (i == j) continue;
      if (m[(size_t)i][(size_t)j] > 0)
        throw std::invalid_argument("cartan: positive off-diagonal entry");
      if ((m[(size_t)i][(size_t)j] == 0) != (m[(size_t)j][(size_t)i] == 0))
        throw std::invalid_argument("cartan: zero pattern not symmetric");
    }
  }
  // minimal symmetrizer: propagate ratios along edges of each component,
  // then clear denominators and divide by the gcd
  std::vector<mpq_class> rho((size_t)cd.n, mpq_class(0));
  std::vector<int> comp((size_t)cd.n, -1);
  int ncomp = 0;
  for (int start = 0; start < cd.n; ++start) {
    if (comp[(size_t)start] >= 0) continue;
    int cid = ncomp++;
    std::vector<int> stack = {start};
    comp[(size_t)start] = cid;
    rho[(size_t)start] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < cd.n; ++j) {
        if (i == j || cd.C[(size_t)i][(size_t)j] == 0) continue;
        mpq_class want = rho[(size_t)i] * cd.C[(size_t)i][(size_t)j] / cd.C[(size_t)j][(size_t)i];
        if (comp[(size_t)j] < 0) {
          comp[(size_t)j] = cid;
          rho[(size_t)j] = want;
          stack.push_back(j);
        } else if (rho[(size_t)j] != want) {
          throw std::invalid_argument("cartan: matrix is not symmetrizable");
        }
      }
    }
    // scale this component to coprime positive integers
    mpz_class den_lcm = 1, num_gcd = 0;
    for (int i = 0; i < cd.n; ++i)
      if (comp[(size_t)i] == cid)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), rho[(size_t)i].get_den().get_mpz_t());
    for (int i = 0; i < cd.n; ++i)
      if (comp[(size_t)i] == cid) {
        mpz_class v = rho[(size_t)i].get_num() * (den_lcm / rho[(size_t)i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
      }
    for (int i = 0; i < cd.n; ++i)
      if (comp[(size_t)i] == cid)
        rho[(size_t)i] = rho[(size_t)i] * den_lcm / num_gcd;
  }
  cd.r.resize((size_t)cd.n);
  for (int i = 0; i < cd.n; ++i) {
    if (rho[(size_t)i].get_den() != 1 || rho[(size_t)i] <= 0)
      throw std::logic_error("cartan: symmetrizer normalization failed");
    cd.r[(size_t)i] = rho[(size_t)i].get_num().get_si();
  }
  // sanity: r C symmetric
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j)
      if (cd.r[(size_t)i] * cd.C[(size_t)i][(size_t)j] != cd.r[(size_t)j] * cd.C[(size_t)j][(size_t)i])
        throw std::logic_error("cartan: symmetrizer check failed");
  // rank and completion
  std::vector<std::vector<mpq_class>> qc((size_t)cd.n, std::vector<mpq_class>((size_t)cd.n));
  for (int i = 0; i < cd.n; ++i)
    for (int j = 0; j < cd.n; ++j) qc[(size_t)i][(size_t)j] = cd.C[(size_t)i][(size_t)j];
  std::vector<std::vector<mpq_class>> ker;
  cd.rank_c = q_rank(qc, cd.n, cd.n, &ker);
  cd.kappa = std::move(ker);  // kernel vectors as completion rows
  // verify [C; kappa] has full column rank
  std::vector<std::vector<mpq_class>> stacked = qc;
  for (const auto& row : cd.kappa) stacked.push_back(row);
  if (q_rank(stacked, (int)stacked.size(), cd.n, nullptr) != cd.n)
    throw std::logic_error("cartan: completion failed");
  return cd;
}

bool CartanData::admissible() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || C[(size_t)i][(size_t)j] >= -1) continue;
      if (r[(size_t)i] != 1 || -C[(size_t)j][(size_t)i] != 1) return false;
    }
  return true;
}

WeightVector CartanData::fundamental(int i) const {
  WeightVector w = wv_zero();
  w[(size_t)i] = 1;
  return w;
}

WeightVector CartanData::simple_root(int i) const {
  WeightVector w = wv_zero();
  for (int j = 0; j < n; ++j) w[(size_t)j] = C[(size_t)j][(size_t)i];
  for (int k = 0; k < ext(); ++k) w[(size_t)(n + k)] = kappa[(size_t)k][(size_t)i];
  return w;
}

Mat<RatQ> CartanData::quantum_cartan() const {
  Mat<RatQ> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m.at(i, j) = RatQ::q_pow(r[(size_t)i]) + RatQ::q_pow(-r[(size_t)i]);
      else
        m.at(i, j) = RatQ::qint(C[(size_t)i][(size_t)j]);
    }
  return m;
}

RatQ CartanData::quantum_det() const { return det(quantum_cartan()); }

bool CartanData::quantum_det_regular() const {
  RatQ d = quantum_det();
  if (d.is_zero()) return false;
  if (d != d.subst_qinv()) return false;
  long R = 0;
  for (long v : r) R += v;
  // top term: shift + deg(num) - deg(den) must be R with unit coefficient
  long top = d.shift() + d.num().deg() - d.den().deg();
  if (top != R || d.shift() != -R) return false;
  if (!d.den().is_zero() && d.den().deg() != 0) return false;
  if (d.coef() * d.num().c.back() != 1) return false;
  if (d.coef() * d.num().c.front() != 1) return false;
  return true;
}

std::string CartanData::wv_str(const WeightVector& w) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < wdim(); ++k) {
    const mpq_class& v = w[(size_t)k];
    if (v == 0) continue;
    std::string name = k < n ? ("L" + std::to_string(k + 1))
                             : ("d" + std::to_string(k - n + 1));
    if (v == 1) {
      os << (first ? "" : "+") << name;
    } else if (v == -1) {
      os << "-" << name;
    } else {
      if (!first && v > 0) os << "+";
      os << v.get_str() << "*" << name;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WeightVector wv_add(const WeightVector& a, const WeightVector& b) {
  WeightVector w(a.size());
  for (size_t k = 0; k < a.size(); ++k) w[k] = a[k] + b[k];
  return w;
}
WeightVector wv_sub(const WeightVector& a, const WeightVector& b) {
  WeightVector w(a.size());
  for (size_t k = 0; k < a.size(); ++k) w[k] = a[k] - b[k];
  return w;
}
WeightVector wv_scale(const WeightVector& a, const mpq_class& s) {
  WeightVector w(a.size());
  for (size_t k = 0; k < a.size(); ++k) w[k] = a[k] * s;
  return w;
}
bool wv_is_zero(const WeightVector& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

std::optional<std::vector<mpq_class>> alpha_coords(const CartanData& cd,
                                                   const WeightVector& w) {
  // solve [C; kappa] x = w by rational elimination on the augmented matrix
  int rows = cd.wdim(), cols = cd.n;
  std::vector<std::vector<mpq_class>> m((size_t)rows,
                                        std::vector<mpq_class>((size_t)cols + 1));
  for (int j = 0; j < cols; ++j) {
    WeightVector col = cd.simple_root(j);
    for (int i = 0; i < rows; ++i) m[(size_t)i][(size_t)j] = col[(size_t)i];
  }
  for (int i = 0; i < rows; ++i) m[(size_t)i][(size_t)cols] = w[(size_t)i];
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[(size_t)i][(size_t)col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[(size_t)sel], m[(size_t)row]);
    mpq_class inv = 1 / m[(size_t)row][(size_t)col];
    for (int j = col; j <= cols; ++j) m[(size_t)row][(size_t)j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[(size_t)i][(size_t)col] == 0) continue;
      mpq_class f = m[(size_t)i][(size_t)col];
      for (int j = col; j <= cols; ++j) m[(size_t)i][(size_t)j] -= f * m[(size_t)row][(size_t)j];
    }
    piv.push_back(col);
    ++row;
  }
  // simple roots are independent: every column is a pivot
  if ((int)piv.size() != cols) throw std::logic_error("alpha_coords: root matrix degenerate");
  for (int i = (int)piv.size(); i < rows; ++i)
    if (m[(size_t)i][(size_t)cols] != 0) return std::nullopt;  // inconsistent
  std::vector<mpq_class> x((size_t)cols);
  for (size_t pi = 0; pi < piv.size(); ++pi) x[(size_t)piv[pi]] = m[pi][(size_t)cols];
  return x;
}

bool in_positive_root_cone(const CartanData& cd, const WeightVector& w) {
  auto x = alpha_coords(cd, w);
  if (!x) return false;
  for (const auto& v : *x)
    if (v < 0 || v.get_den() != 1) return false;
  return true;
}

mpq_class root_height(const CartanData& cd, const WeightVector& w) {
  auto x = alpha_coords(cd, w);
  if (!x) throw std::invalid_argument("root_height: not in the root span");
  mpq_class h = 0;
  for (const auto& v : *x) h += v;
  return h;
}

bool is_dominant_weight(const CartanData& cd, const WeightVector& w) {
  for (int i = 0; i < cd.n; ++i)
    if (cd.pair_coroot(w, i) < 0) return false;
  return true;
}

bool symmetrizer_constraints_ok(const CartanData& cd) {
  const int n = cd.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long cij = cd.C[(size_t)i][(size_t)j], cji = cd.C[(size_t)j][(size_t)i];
      long ri = cd.r[(size_t)i], rj = cd.r[(size_t)j];
      if (ri < -cji) return false;                                      // (1)
      if (i == j) continue;
      if (ri != 1 && cij < -1) return false;                            // (2)
      if (ri == 1 && cij != 0 && cji != -1) return false;               // (3)
      if (ri > 1 && cij < 0) {
        if (cij != -1) return false;                                    // (4)
        bool tied = (cji == -1 && ri == rj) || (cji == -ri && rj == 1);
        if (!tied) return false;                                        // (5)
      }
    }
  }
  return !cd.quantum_det().is_zero();                                   // (6)
}

}  // namespace qaf
