#pragma once

#include <cstddef>
#include <vector>

#include "dwcat/eigen.hpp"

// Brute-force reference computations. None of these share code with the
// production kernels; they exist so results can be cross-checked.
namespace dwcat::oracle {

/// Dense real symmetric matrix, row-major.
struct DenseSymmetric {
  std::size_t dim = 0;
  std::vector<double> data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }

  static DenseSymmetric from_tridiag(const TridiagSymmetric& t);
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
/// 1e-15 of the total. Same ordering and sign convention as tridiag_eigen.
EigenDecomposition jacobi_eigen(DenseSymmetric a);

/// Wigner small-d matrix element d^j_{m' m}(beta) from the finite binomial
/// sum, with j = atoms/2 and m, m' given as basis indices (m = index - j).
double wigner_small_d(int atoms, std::size_t row_index, std::size_t col_index, double beta);

}  // namespace dwcat::oracle
