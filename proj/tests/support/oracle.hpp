#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library: bases are brute-forced, matrices are dense, q-numbers are
// evaluated from their defining quotient or their geometric-sum expansion.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using State = std::vector<int>;
using Dense = std::vector<std::vector<cplx>>;

inline int theta(int n, int i) { return i > n ? 1 : 0; }

/// Every r in [0,p]^n x [0,1]^m with |r| <= p, lexicographic.
inline std::vector<State> brute_basis(int n, int m, int p) {
  const int rank = n + m;
  std::vector<State> out;
  State r(static_cast<std::size_t>(rank), 0);
  while (true) {
    int total = 0;
    for (int v : r) total += v;
    if (total <= p) out.push_back(r);
    int k = rank - 1;
    for (; k >= 0; --k) {
      const int bound = theta(n, k + 1) ? 1 : p;
      if (r[static_cast<std::size_t>(k)] < bound) {
        ++r[static_cast<std::size_t>(k)];
        break;
      }
      r[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (q^x - q^-x)/(q - q^-1) by direct evaluation.
inline cplx qnum(int x, cplx q) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); }

/// Coefficients of [x] as exponent -> integer, from the geometric sum
/// q^{x-1} + q^{x-3} + ... + q^{1-x} (negated for x < 0).
inline std::map<int, long> qint_coefficients(int x) {
  std::map<int, long> c;
  const int a = std::abs(x);
  for (int k = 0; k < a; ++k) c[a - 1 - 2 * k] += x > 0 ? 1 : -1;
  return c;
}

inline int total(const State& r) {
  int t = 0;
  for (int v : r) t += v;
  return t;
}

inline long h_eigen(int n, int p, int i, const State& r) {
  const int ri = r[static_cast<std::size_t>(i - 1)];
  return p - (theta(n, i) ? -ri : ri) - total(r);
}

inline std::size_t index_of(const std::vector<State>& basis, const State& r) {
  return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), r) - basis.begin());
}

inline Dense zeros(std::size_t d) { return Dense(d, std::vector<cplx>(d, 0.0)); }

/// The creation/annihilation matrix elements printed in the paper, verbatim,
/// with sqrt([a][b]) read as sqrt([a]) sqrt([b]) (principal branches).
/// `orthonormal == false` gives the square-root-free rescaled form.
inline Dense cao(int n, int m, int p, int i, int sign, cplx q, bool orthonormal) {
  const auto basis = brute_basis(n, m, p);
  Dense a = zeros(basis.size());
  const int th = theta(n, i);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const State& r = basis[col];
    int s = 0, odd = 0;
    for (int l = 1; l < i; ++l) {
      s += r[static_cast<std::size_t>(l - 1)];
      odd += theta(n, l) * r[static_cast<std::size_t>(l - 1)];
    }
    const double phase = (th * odd) % 2 ? -1.0 : 1.0;
    const int ri = r[static_cast<std::size_t>(i - 1)];
    State t = r;
    t[static_cast<std::size_t>(i - 1)] += sign;
    const int tt = total(t);
    if (t[static_cast<std::size_t>(i - 1)] < 0 || tt > p || (th && t[static_cast<std::size_t>(i - 1)] > 1)) continue;
    cplx v;
    if (sign > 0) {
      v = phase * std::pow(q, -s) * double(1 - th * ri);
      if (orthonormal) v *= std::sqrt(qnum(ri + 1, q)) * std::sqrt(qnum(p - total(r), q));
    } else {
      v = phase * std::pow(q, s);
      v *= orthonormal ? std::sqrt(qnum(ri, q)) * std::sqrt(qnum(p - total(r) + 1, q))
                       : qnum(ri, q) * qnum(p - total(r) + 1, q);
    }
    a[index_of(basis, t)][col] += v;
  }
  return a;
}

inline Dense diag_h(int n, int m, int p, int i) {
  const auto basis = brute_basis(n, m, p);
  Dense h = zeros(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) h[k][k] = double(h_eigen(n, p, i, basis[k]));
  return h;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense c = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (a[i][k] != 0.0)
        for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense lin(const Dense& a, cplx alpha, const Dense& b, cplx beta) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = alpha * a[i][j] + beta * b[i][j];
  return c;
}

/// ab - (-1)^{pa pb} x ba
inline Dense qbracket(const Dense& a, int pa, const Dense& b, int pb, cplx x) {
  return lin(mul(a, b), 1.0, mul(b, a), ((pa & pb & 1) != 0 ? 1.0 : -1.0) * x);
}

inline double max_abs(const Dense& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

/// Z and <r_i + r_{i+n}> by direct summation, n = m.
struct Thermo {
  double Z = 0.0;
  std::vector<double> occ;
};
inline Thermo thermo(int n, int p, const std::vector<double>& eps, double beta) {
  Thermo t;
  t.occ.assign(static_cast<std::size_t>(n), 0.0);
  for (const auto& r : brute_basis(n, n, p)) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) e += eps[static_cast<std::size_t>(i)] * (r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(i + n)]);
    const double w = std::exp(-beta * e);
    t.Z += w;
    for (int i = 0; i < n; ++i) t.occ[static_cast<std::size_t>(i)] += (r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(i + n)]) * w;
  }
  for (auto& o : t.occ) o /= t.Z;
  return t;
}

}  // namespace oracle
