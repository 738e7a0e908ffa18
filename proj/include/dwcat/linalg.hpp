#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwcat {

using Complex = std::complex<double>;

/// Input outside the domain where a formula or model is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operand shapes that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative kernel failed, or a result that must be real came out complex.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  /// Position (eigenvalue index, grid index, ...) at which the failure happened.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Dense square complex matrix, row-major. Only used for the small
/// (N+1)-dimensional operators of the two-mode problem.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  std::vector<Complex> operator*(std::span<const Complex> vec) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scale) const;

  /// Largest absolute value of any entry.
  double max_abs() const;

 private:
  void require_same_dim(const ComplexMatrix& rhs) const;

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Commutator AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-abs distance of U^dagger U from the identity.
double unitarity_residual(const ComplexMatrix& u);

/// <a|b>, conjugating the left argument.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

double euclidean_norm(std::span<const Complex> v);

}  // namespace dwcat
