#pragma once
// Dense exact linear algebra over a field type F (RatQ or RatQU): Gaussian
// elimination, kernels, determinants, characteristic polynomials.  Sizes here
// are tiny (weight-space blocks), clarity over cleverness.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qaf {

template <class F>
struct Mat {
  int r = 0, c = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int rr, int cc) : r(rr), c(cc), a((size_t)rr * cc, F::zero()) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F::one();
    return m;
  }
  F& at(int i, int j) { return a[(size_t)i * c + j]; }
  const F& at(int i, int j) const { return a[(size_t)i * c + j]; }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }

  Mat operator+(const Mat& o) const {
    Mat m(r, c);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] + o.a[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m(r, c);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] - o.a[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c != o.r) throw std::logic_error("Mat: size mismatch");
    Mat m(r, o.c);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) {
        const F& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c; ++j) {
          const F& y = o.at(k, j);
          if (y.is_zero()) continue;
          m.at(i, j) += x * y;
        }
      }
    return m;
  }
  Mat scaled(const F& s) const {
    Mat m(r, c);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] * s;
    return m;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out((size_t)r, F::zero());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (!at(i, j).is_zero() && !v[(size_t)j].is_zero()) out[(size_t)i] += at(i, j) * v[(size_t)j];
    return out;
  }
};

// row-reduce in place; returns pivot columns
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int sel = -1;
    for (int i = row; i < m.r; ++i)
      if (!m.at(i, col).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.c; ++j) std::swap(m.at(sel, j), m.at(row, j));
    F inv = F::one() / m.at(row, col);
    for (int j = col; j < m.c; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      F f = m.at(i, col);
      for (int j = col; j < m.c; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return (int)rref(m).size();
}

// basis of the right kernel
template <class F>
std::vector<std::vector<F>> kernel(Mat<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.c, false);
  for (int p : piv) is_pivot[(size_t)p] = true;
  std::vector<std::vector<F>> basis;
  for (int f = 0; f < m.c; ++f) {
    if (is_pivot[(size_t)f]) continue;
    std::vector<F> v((size_t)m.c, F::zero());
    v[(size_t)f] = F::one();
    for (size_t pi = 0; pi < piv.size(); ++pi) v[(size_t)piv[pi]] = -m.at((int)pi, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// solve m x = b; nullopt if inconsistent; free variables set to zero
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
  Mat<F> aug(m.r, m.c + 1);
  for (int i = 0; i < m.r; ++i) {
    for (int j = 0; j < m.c; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.c) = b[(size_t)i];
  }
  auto piv = rref(aug);
  for (int p : piv)
    if (p == m.c) return std::nullopt;  // pivot in RHS column
  std::vector<F> x((size_t)m.c, F::zero());
  for (size_t pi = 0; pi < piv.size(); ++pi) x[(size_t)piv[pi]] = aug.at((int)pi, m.c);
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.r != m.c) return std::nullopt;
  Mat<F> aug(m.r, 2 * m.c);
  for (int i = 0; i < m.r; ++i) {
    for (int j = 0; j < m.c; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.c + i) = F::one();
  }
  auto piv = rref(aug);
  if ((int)piv.size() != m.r) return std::nullopt;
  for (size_t pi = 0; pi < piv.size(); ++pi)
    if (piv[pi] != (int)pi) return std::nullopt;
  Mat<F> inv(m.r, m.c);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) inv.at(i, j) = aug.at(i, m.c + j);
  return inv;
}

template <class F>
F det(Mat<F> m) {
  if (m.r != m.c) throw std::logic_error("det: not square");
  F d = F::one();
  for (int col = 0; col < m.c; ++col) {
    int sel = -1;
    for (int i = col; i < m.r; ++i)
      if (!m.at(i, col).is_zero()) { sel = i; break; }
    if (sel < 0) return F::zero();
    if (sel != col) {
      for (int j = 0; j < m.c; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    F inv = F::one() / m.at(col, col);
    for (int i = col + 1; i < m.r; ++i) {
      if (m.at(i, col).is_zero()) continue;
      F f = m.at(i, col) * inv;
      for (int j = col; j < m.c; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

// characteristic polynomial det(zI - M), coefficients by ascending power of z
// (Faddeev-LeVerrier; exact in characteristic zero)
template <class F>
std::vector<F> charpoly(const Mat<F>& m) {
  int n = m.r;
  std::vector<F> c((size_t)n + 1, F::zero());
  c[(size_t)n] = F::one();
  Mat<F> M = Mat<F>(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A*M_{k-1} + c_{n-k+1} I
    M = m * M;
    for (int i = 0; i < n; ++i) M.at(i, i) += c[(size_t)(n - k + 1)];
    F tr = F::zero();
    Mat<F> AM = m * M;
    for (int i = 0; i < n; ++i) tr += AM.at(i, i);
    c[(size_t)(n - k)] = -(tr / F::integer(k));
  }
  return c;
}

}  // namespace qaf
