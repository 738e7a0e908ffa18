#include "dwcat/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dwcat {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

void ComplexMatrix::require_same_dim(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_)
    throw DimensionError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                         std::to_string(rhs.dim_));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  require_same_dim(rhs);
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

std::vector<Complex> ComplexMatrix::operator*(std::span<const Complex> vec) const {
  if (vec.size() != dim_)
    throw DimensionError("vector length " + std::to_string(vec.size()) +
                         " does not match matrix dimension " + std::to_string(dim_));
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * vec[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  require_same_dim(rhs);
  ComplexMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  require_same_dim(rhs);
  ComplexMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
  ComplexMatrix out(*this);
  for (auto& x : out.data_) x *= scale;
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).max_abs();
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size())
    throw DimensionError("inner product of vectors with lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double euclidean_norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

}  // namespace dwcat
