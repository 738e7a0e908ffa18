#include "dwcat/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dwcat/spinalg.hpp"

namespace dwcat {

void TridiagSymmetric::validate() const {
  if (diag.empty()) throw DimensionError("tridiagonal matrix must have dimension >= 1");
  if (offdiag.size() + 1 != diag.size())
    throw DimensionError("tridiagonal matrix with " + std::to_string(diag.size()) +
                         " diagonal entries needs " + std::to_string(diag.size() - 1) +
                         " off-diagonal entries, got " + std::to_string(offdiag.size()));
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(diag.begin(), diag.end(), finite) ||
      !std::all_of(offdiag.begin(), offdiag.end(), finite))
    throw DomainError("tridiagonal matrix has non-finite entries");
}

namespace {

template <typename T>
std::vector<T> tridiag_apply(const TridiagSymmetric& t, std::span<const T> v) {
  const std::size_t d = t.dim();
  if (v.size() != d)
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " does not match tridiagonal dimension " + std::to_string(d));
  std::vector<T> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    T acc = t.diag[i] * v[i];
    if (i > 0) acc += t.offdiag[i - 1] * v[i - 1];
    if (i + 1 < d) acc += t.offdiag[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> TridiagSymmetric::apply(std::span<const double> v) const {
  return tridiag_apply<double>(*this, v);
}

std::vector<Complex> TridiagSymmetric::apply(std::span<const Complex> v) const {
  return tridiag_apply<Complex>(*this, v);
}

double TridiagSymmetric::gershgorin_radius() const {
  double r = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i < offdiag.size()) row += std::abs(offdiag[i]);
    r = std::max(r, row);
  }
  return r;
}

ComplexMatrix TridiagSymmetric::to_dense() const {
  ComplexMatrix m(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    m(i, i) = diag[i];
    if (i + 1 < dim()) {
      m(i, i + 1) = offdiag[i];
      m(i + 1, i) = offdiag[i];
    }
  }
  return m;
}

void fix_sign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (!v.empty() && v[best] < 0.0)
    for (auto& x : v) x = -x;
}

EigenDecomposition tridiag_eigen(const TridiagSymmetric& t) {
  t.validate();
  const std::size_t n = t.dim();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> d = t.diag;
  // e[i] couples i and i+1; e[n-1] is a zero sentinel.
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());

  // z is column-major: z[k * n + i] is component i of vector k.
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxSweeps)
        throw NumericalError("tridiagonal QL did not converge for eigenvalue " +
                                 std::to_string(l) + " after " + std::to_string(kMaxSweeps) +
                                 " sweeps",
                             l);

      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        double* zi = &z[ii * n];
        double* zi1 = &z[(ii + 1) * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double zf = zi1[k];
          zi1[k] = s * zi[k] + c * zf;
          zi[k] = c * zi[k] - s * zf;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(d[k]);
    std::vector<double> v(z.begin() + static_cast<std::ptrdiff_t>(k * n),
                          z.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
    fix_sign(v);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::size_t sturm_count_below(const TridiagSymmetric& t, double x) {
  t.validate();
  constexpr double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = t.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == t.dim()) break;
    q = t.diag[i + 1] - x - t.offdiag[i] * t.offdiag[i] / q;
  }
  return count;
}

ComplexMatrix spectral_exponential(const TridiagSymmetric& t, double angle) {
  const EigenDecomposition eig = tridiag_eigen(t);
  const std::size_t n = t.dim();
  ComplexMatrix u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -angle * eig.values[k]);
    const auto& v = eig.vectors[k];
    for (std::size_t r = 0; r < n; ++r) {
      const Complex left = phase * v[r];
      for (std::size_t c = 0; c < n; ++c) u(r, c) += left * v[c];
    }
  }
  return u;
}

ComplexMatrix rotation_about_x(int atoms, double angle) {
  return spectral_exponential(build_spin_operators(atoms).sx, angle);
}

StateVector apply_unitary(const ComplexMatrix& u, const StateVector& psi) {
  return StateVector(psi.basis(), u * psi.amplitudes());
}

}  // namespace dwcat
