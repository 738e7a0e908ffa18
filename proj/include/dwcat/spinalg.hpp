#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dwcat/eigen.hpp"
#include "dwcat/linalg.hpp"
#include "dwcat/state.hpp"

namespace dwcat {

/// Schwinger spin operators for two bosonic modes,
///   S_x = (b_l^+ b_r + b_r^+ b_l) / 2
///   S_y = (b_l^+ b_r - b_r^+ b_l) / 2i
///   S_z = (b_l^+ b_l - b_r^+ b_r) / 2
/// in the TwoModeBasis ordering. S_y is stored through its upper off-diagonal:
/// S_y(i, i+1) = i * sy_upper[i] and S_y(i+1, i) = -i * sy_upper[i].
struct SpinOperators {
  TwoModeBasis basis;
  TridiagSymmetric sx;
  std::vector<double> sy_upper;
  std::vector<double> sz;

  std::vector<Complex> apply_sx(std::span<const Complex> v) const;
  std::vector<Complex> apply_sy(std::span<const Complex> v) const;
  std::vector<Complex> apply_sz(std::span<const Complex> v) const;

  ComplexMatrix dense_sx() const;
  ComplexMatrix dense_sy() const;
  ComplexMatrix dense_sz() const;
};

/// Parity of the left-well atom number, (-1)^{n_left}; diagonal +-1.
class ParityOperator {
 public:
  explicit ParityOperator(TwoModeBasis basis);

  const TwoModeBasis& basis() const noexcept { return basis_; }
  int sign(std::size_t index) const noexcept { return (index % 2 == 0) ? 1 : -1; }
  std::vector<int> diagonal() const;

  std::vector<Complex> apply(std::span<const Complex> v) const;
  double expectation(const StateVector& psi) const;
  ComplexMatrix dense() const;

 private:
  TwoModeBasis basis_;
};

/// Matrix elements from the boson action on |n_l, n_r>: the S_x coupling
/// between i and i+1 is sqrt((i+1)(N-i)) / 2. Throws DomainError for N < 2.
SpinOperators build_spin_operators(int atoms);

/// (|N,0> + e^{i phi} |0,N>) / sqrt(2). phi = 0 is the symmetric cat |S>,
/// phi = pi the antisymmetric cat |A>.
StateVector cat_state(int atoms, double phi);

/// (|+N/2>_y, |-N/2>_y) with the phases that follow from rotating
/// |-+N/2>_z by pi/2 about x:
///   <i|+N/2>_y = sqrt(C(N,i) / 2^N) (-i)^i
///   <i|-N/2>_y = (-i)^N sqrt(C(N,i) / 2^N) i^i
std::pair<StateVector, StateVector> sy_extreme_eigenstates(int atoms);

ParityOperator parity_operator(int atoms);

/// sqrt(C(n,k) / 2^n), evaluated in log space so it stays finite for large n.
double binomial_amplitude(int n, int k);

}  // namespace dwcat
