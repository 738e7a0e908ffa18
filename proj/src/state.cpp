#include "dwcat/state.hpp"

#include <cmath>
#include <string>

namespace dwcat {

TwoModeBasis::TwoModeBasis(int atoms) : atoms_(atoms) {
  if (atoms < 2)
    throw DomainError("atom count must be at least 2 (got " + std::to_string(atoms) +
                      "); with a single atom there is no interaction and the model "
                      "degenerates");
}

StateVector::StateVector(TwoModeBasis basis, std::vector<Complex> amplitudes)
    : basis_(basis), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != basis_.dim())
    throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                         " amplitudes but the basis has dimension " +
                         std::to_string(basis_.dim()));
  const double n = euclidean_norm(amplitudes_);
  if (!std::isfinite(n) || n == 0.0)
    throw DomainError("state vector must be finite and nonzero");
  for (auto& a : amplitudes_) a /= n;
}

StateVector StateVector::basis_state(TwoModeBasis basis, std::size_t index) {
  if (index >= basis.dim())
    throw DimensionError("basis index " + std::to_string(index) + " out of range for N=" +
                         std::to_string(basis.atoms()));
  std::vector<Complex> amps(basis.dim());
  amps[index] = 1.0;
  return StateVector(basis, std::move(amps));
}

Complex StateVector::overlap(const StateVector& other) const {
  return inner_product(amplitudes_, other.amplitudes_);
}

}  // namespace dwcat
