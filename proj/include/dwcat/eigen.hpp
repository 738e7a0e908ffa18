#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dwcat/linalg.hpp"
#include "dwcat/state.hpp"

namespace dwcat {

/// Real symmetric tridiagonal matrix: diag has length d, offdiag has d-1
/// entries where offdiag[i] couples rows i and i+1.
struct TridiagSymmetric {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t dim() const noexcept { return diag.size(); }

  /// Throws DimensionError for inconsistent lengths or d == 0, DomainError
  /// for non-finite entries.
  void validate() const;

  std::vector<double> apply(std::span<const double> v) const;
  std::vector<Complex> apply(std::span<const Complex> v) const;

  /// max(|d_i| + |e_{i-1}| + |e_i|), a Gershgorin bound on the spectral radius.
  double gershgorin_radius() const;

  ComplexMatrix to_dense() const;
};

/// Ascending eigenvalues with matching orthonormal eigenvectors; vectors[k]
/// belongs to values[k]. In each vector the largest-magnitude component
/// (first one on ties) is positive.
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Implicit-shift QL with Wilkinson shifts, eigenvectors accumulated.
///
/// An off-diagonal element is deflated when |e_i| <= eps * (|d_i| + |d_{i+1}|).
/// Throws NumericalError carrying the eigenvalue index if any eigenvalue needs
/// more than kMaxSweeps iterations.
EigenDecomposition tridiag_eigen(const TridiagSymmetric& t);

inline constexpr int kMaxSweeps = 50;

/// Number of eigenvalues strictly below x, from the Sturm sequence sign count.
std::size_t sturm_count_below(const TridiagSymmetric& t, double x);

/// exp(-i * angle * T) = V exp(-i angle Lambda) V^T built from tridiag_eigen.
ComplexMatrix spectral_exponential(const TridiagSymmetric& t, double angle);

/// exp(-i * angle * S_x) on the (N+1)-dimensional two-mode space.
ComplexMatrix rotation_about_x(int atoms, double angle);

/// U |psi>, renormalized. Throws DimensionError if the sizes disagree.
StateVector apply_unitary(const ComplexMatrix& u, const StateVector& psi);

/// Flips the sign of `v` so that its largest-magnitude entry is positive.
void fix_sign(std::span<double> v);

}  // namespace dwcat
