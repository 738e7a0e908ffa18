#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dwcat/linalg.hpp"

namespace dwcat {

/// Two-mode Fock basis for N atoms.
///
/// Index i labels |n_left = i, n_right = N - i>. In the spin picture that is
/// the S_z eigenstate with m_z = i - N/2, so index N is |N,0> = |+N/2>_z and
/// index 0 is |0,N> = |-N/2>_z. With this ordering the lowering operator
/// b_r^dagger b_l maps index i onto a non-negative multiple of index i-1.
class TwoModeBasis {
 public:
  /// Throws DomainError unless atoms >= 2 (single-atom systems have no
  /// interaction energy and the perturbative formulas are singular there).
  explicit TwoModeBasis(int atoms);

  int atoms() const noexcept { return atoms_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(atoms_) + 1; }
  double total_spin() const noexcept { return 0.5 * atoms_; }
  double m_z(std::size_t index) const noexcept {
    return static_cast<double>(index) - total_spin();
  }

  friend bool operator==(const TwoModeBasis&, const TwoModeBasis&) = default;

 private:
  int atoms_;
};

/// Normalized pure state over a TwoModeBasis.
class StateVector {
 public:
  /// Normalizes the amplitudes. Throws DimensionError on a length mismatch
  /// and DomainError for a zero or non-finite vector.
  StateVector(TwoModeBasis basis, std::vector<Complex> amplitudes);

  /// Fock state |n_left = index, n_right = N - index>.
  static StateVector basis_state(TwoModeBasis basis, std::size_t index);

  const TwoModeBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const { return euclidean_norm(amplitudes_); }

  /// <this|other>.
  Complex overlap(const StateVector& other) const;

 private:
  TwoModeBasis basis_;
  std::vector<Complex> amplitudes_;
};

}  // namespace dwcat
