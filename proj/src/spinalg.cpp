#include "dwcat/spinalg.hpp"

#include <cmath>
#include <numbers>

namespace dwcat {

namespace {

constexpr Complex kI{0.0, 1.0};

// i^k for integer k.
Complex i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

SpinOperators build_spin_operators(int atoms) {
  const TwoModeBasis basis(atoms);
  const std::size_t d = basis.dim();
  SpinOperators ops{basis, {}, {}, {}};
  ops.sx.diag.assign(d, 0.0);
  ops.sx.offdiag.resize(d - 1);
  ops.sy_upper.resize(d - 1);
  ops.sz.resize(d);
  const double n = atoms;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    // b_l^+ b_r |i, N-i> = sqrt((i+1)(N-i)) |i+1, N-i-1>
    const double hop = std::sqrt((static_cast<double>(i) + 1.0) * (n - static_cast<double>(i)));
    ops.sx.offdiag[i] = 0.5 * hop;
    ops.sy_upper[i] = 0.5 * hop;
  }
  for (std::size_t i = 0; i < d; ++i) ops.sz[i] = basis.m_z(i);
  return ops;
}

std::vector<Complex> SpinOperators::apply_sx(std::span<const Complex> v) const {
  return sx.apply(v);
}

std::vector<Complex> SpinOperators::apply_sy(std::span<const Complex> v) const {
  const std::size_t d = sz.size();
  if (v.size() != d) throw DimensionError("S_y applied to a vector of the wrong length");
  std::vector<Complex> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc{};
    if (i + 1 < d) acc += kI * sy_upper[i] * v[i + 1];
    if (i > 0) acc -= kI * sy_upper[i - 1] * v[i - 1];
    out[i] = acc;
  }
  return out;
}

std::vector<Complex> SpinOperators::apply_sz(std::span<const Complex> v) const {
  if (v.size() != sz.size()) throw DimensionError("S_z applied to a vector of the wrong length");
  std::vector<Complex> out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= sz[i];
  return out;
}

ComplexMatrix SpinOperators::dense_sx() const { return sx.to_dense(); }

ComplexMatrix SpinOperators::dense_sy() const {
  ComplexMatrix m(sz.size());
  for (std::size_t i = 0; i < sy_upper.size(); ++i) {
    m(i, i + 1) = kI * sy_upper[i];
    m(i + 1, i) = -kI * sy_upper[i];
  }
  return m;
}

ComplexMatrix SpinOperators::dense_sz() const {
  ComplexMatrix m(sz.size());
  for (std::size_t i = 0; i < sz.size(); ++i) m(i, i) = sz[i];
  return m;
}

ParityOperator::ParityOperator(TwoModeBasis basis) : basis_(basis) {}

std::vector<int> ParityOperator::diagonal() const {
  std::vector<int> out(basis_.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sign(i);
  return out;
}

std::vector<Complex> ParityOperator::apply(std::span<const Complex> v) const {
  if (v.size() != basis_.dim())
    throw DimensionError("parity applied to a vector of the wrong length");
  std::vector<Complex> out(v.begin(), v.end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

double ParityOperator::expectation(const StateVector& psi) const {
  if (!(psi.basis() == basis_)) throw DimensionError("parity and state use different bases");
  double acc = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) acc += sign(i) * std::norm(psi[i]);
  return acc;
}

ComplexMatrix ParityOperator::dense() const {
  ComplexMatrix m(basis_.dim());
  for (std::size_t i = 0; i < basis_.dim(); ++i) m(i, i) = sign(i);
  return m;
}

ParityOperator parity_operator(int atoms) { return ParityOperator(TwoModeBasis(atoms)); }

StateVector cat_state(int atoms, double phi) {
  const TwoModeBasis basis(atoms);
  std::vector<Complex> amps(basis.dim());
  amps[basis.dim() - 1] = std::numbers::sqrt2 / 2.0;
  amps[0] = std::polar(std::numbers::sqrt2 / 2.0, phi);
  return StateVector(basis, std::move(amps));
}

double binomial_amplitude(int n, int k) {
  const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(0.5 * (log_c - n * std::numbers::ln2));
}

std::pair<StateVector, StateVector> sy_extreme_eigenstates(int atoms) {
  const TwoModeBasis basis(atoms);
  std::vector<Complex> plus(basis.dim()), minus(basis.dim());
  const Complex global = i_power(-static_cast<long>(atoms));
  for (int i = 0; i <= atoms; ++i) {
    const double a = binomial_amplitude(atoms, i);
    plus[i] = a * i_power(-i);
    minus[i] = global * a * i_power(i);
  }
  return {StateVector(basis, std::move(plus)), StateVector(basis, std::move(minus))};
}

}  // namespace dwcat
