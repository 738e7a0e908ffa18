#include "dwcat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dwcat::oracle {

DenseSymmetric DenseSymmetric::from_tridiag(const TridiagSymmetric& t) {
  t.validate();
  DenseSymmetric a{t.dim(), std::vector<double>(t.dim() * t.dim(), 0.0)};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    a(i, i) = t.diag[i];
    if (i + 1 < t.dim()) a(i, i + 1) = a(i + 1, i) = t.offdiag[i];
  }
  return a;
}

EigenDecomposition jacobi_eigen(DenseSymmetric a) {
  const std::size_t n = a.dim;
  std::vector<double> v(n * n, 0.0);  // columns are eigenvectors
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
  };
  double total = 0.0;
  for (double x : a.data) total += x * x;
  total = std::sqrt(total);

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * total; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenDecomposition out;
  for (std::size_t k : order) {
    out.values.push_back(a(k, k));
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    fix_sign(col);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

double wigner_small_d(int atoms, std::size_t row_index, std::size_t col_index, double beta) {
  // With j = N/2, m = i - j: j+m = i and j-m = N-i, so every factorial
  // argument below is an integer.
  const int jpm = static_cast<int>(col_index), jmm = atoms - jpm;
  const int jpmp = static_cast<int>(row_index), jmmp = atoms - jpmp;
  const int mp_minus_m = jpmp - jpm;
  const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
  const double log_pref =
      0.5 * (std::lgamma(jpm + 1.0) + std::lgamma(jmm + 1.0) + std::lgamma(jpmp + 1.0) +
             std::lgamma(jmmp + 1.0));
  double sum = 0.0;
  for (int k = std::max(0, -mp_minus_m); k <= std::min(jpm, jmmp); ++k) {
    const double log_den = std::lgamma(jpm - k + 1.0) + std::lgamma(k + 1.0) +
                           std::lgamma(jmmp - k + 1.0) + std::lgamma(k + mp_minus_m + 1.0);
    const double sign = ((k + mp_minus_m) % 2 == 0) ? 1.0 : -1.0;
    const int cos_pow = jpm + jmmp - 2 * k;  // 2j + m - m' - 2k
    const int sin_pow = 2 * k + mp_minus_m;
    sum += sign * std::exp(log_pref - log_den) * std::pow(c, cos_pow) * std::pow(s, sin_pow);
  }
  return sum;
}

}  // namespace dwcat::oracle
