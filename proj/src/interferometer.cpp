#include "dwcat/interferometer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dwcat/eigen.hpp"
#include "parallel.hpp"

namespace dwcat {

std::string_view to_string(SigmaFlag f) {
  switch (f) {
    case SigmaFlag::ok: return "ok";
    case SigmaFlag::limit: return "limit";
    case SigmaFlag::singular: return "singular";
  }
  return "ok";
}

Mixture::Mixture(std::vector<std::pair<double, StateVector>> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("mixture needs at least one component");
  double total = 0.0;
  for (const auto& [w, psi] : components_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("mixture weights must be >= 0");
    if (!(psi.basis() == components_.front().second.basis()))
      throw DomainError("mixture components must share one basis");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw DomainError("mixture weights sum to " + std::to_string(total) + ", expected 1");
}

Mixture Mixture::thermal_cats(int atoms) {
  return Mixture({{0.5, cat_state(atoms, 0.0)}, {0.5, cat_state(atoms, std::numbers::pi)}});
}

ParityInterferometer::ParityInterferometer(int atoms)
    : spin_(build_spin_operators(atoms)),
      parity_(spin_.basis),
      splitter_(spectral_exponential(spin_.sx, std::numbers::pi / 2.0)) {}

void ParityInterferometer::require_basis(const TwoModeBasis& b) const {
  if (!(b == spin_.basis))
    throw DimensionError("state has N=" + std::to_string(b.atoms()) +
                         " but the interferometer was built for N=" +
                         std::to_string(spin_.basis.atoms()));
}

StateVector ParityInterferometer::imprint(const StateVector& psi, double theta) const {
  require_basis(psi.basis());
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= std::polar(1.0, -spin_.sz[i] * theta);
  return StateVector(psi.basis(), std::move(amps));
}

StateVector ParityInterferometer::split(const StateVector& psi) const {
  require_basis(psi.basis());
  return apply_unitary(splitter_, psi);
}

StateVector ParityInterferometer::output_state(const StateVector& psi0, double theta) const {
  return split(imprint(psi0, theta));
}

std::pair<double, double> ParityInterferometer::parity_stats(const StateVector& psi) const {
  require_basis(psi.basis());
  return dwcat::parity_stats(psi);
}

double ParityInterferometer::parity_derivative(const StateVector& psi2) const {
  require_basis(psi2.basis());
  const auto p_psi = parity_.apply(psi2.amplitudes());
  const auto sy_psi = spin_.apply_sy(psi2.amplitudes());
  const Complex sy_p = inner_product(psi2.amplitudes(), spin_.apply_sy(p_psi));
  const Complex p_sy = inner_product(psi2.amplitudes(), parity_.apply(sy_psi));
  const Complex value = Complex{0.0, -1.0} * (sy_p - p_sy);
  if (std::abs(value.imag()) > kImaginaryResidualMax)
    throw NumericalError("parity derivative has imaginary part " + std::to_string(value.imag()),
                         0);
  return value.real();
}

ParityInterferometer::Signal ParityInterferometer::signal(const StateVector& psi0,
                                                          double theta) const {
  const StateVector out = output_state(psi0, theta);
  const auto [p, s] = parity_stats(out);
  return {p, s, parity_derivative(out)};
}

ParityInterferometer::Signal ParityInterferometer::signal(const Mixture& mix,
                                                          double theta) const {
  require_basis(mix.basis());
  if (mix.components().size() == 1) return signal(mix.components().front().second, theta);
  double p = 0.0, d = 0.0;
  for (const auto& [w, psi] : mix.components()) {
    if (w == 0.0) continue;
    const Signal s = signal(psi, theta);
    p += w * s.parity;
    d += w * s.deriv;
  }
  // <P^2> = 1 for any density operator since P^2 = 1.
  return {p, std::sqrt(std::max(0.0, (1.0 - p) * (1.0 + p))), d};
}

template <typename Input>
ScanRow ParityInterferometer::make_row(const Input& input, double theta) const {
  const Signal s = signal(input, theta);
  const double n = spin_.basis.atoms();
  ScanRow row{theta, s.parity, s.sigma, s.deriv, std::numeric_limits<double>::infinity(), 0.0,
              SigmaFlag::singular};
  if (std::abs(s.deriv) >= kDerivativeZero) {
    row.sigma_theta = s.sigma / std::abs(s.deriv);
    row.flag = SigmaFlag::ok;
  } else if (s.sigma < kSigmaZero) {
    const Signal lo = signal(input, theta - kLimitOffset);
    const Signal hi = signal(input, theta + kLimitOffset);
    if (std::abs(lo.deriv) >= kDerivativeZero && std::abs(hi.deriv) >= kDerivativeZero) {
      row.sigma_theta = 0.5 * (lo.sigma / std::abs(lo.deriv) + hi.sigma / std::abs(hi.deriv));
      row.flag = SigmaFlag::limit;
    }
  }
  if (row.flag != SigmaFlag::singular && row.sigma_theta > 0.0)
    row.precision_norm = 1.0 / (n * row.sigma_theta);
  return row;
}

ScanRow ParityInterferometer::run(const StateVector& psi0, double theta) const {
  return make_row(psi0, theta);
}

ScanRow ParityInterferometer::run(const Mixture& mix, double theta) const {
  return make_row(mix, theta);
}

namespace {

void require_ascending(std::span<const double> thetas) {
  if (thetas.empty()) throw DomainError("theta grid is empty");
  for (std::size_t i = 1; i < thetas.size(); ++i)
    if (!(thetas[i] > thetas[i - 1]))
      throw DomainError("theta grid must be strictly ascending (index " + std::to_string(i) +
                        ")");
}

template <typename Input>
std::vector<ScanRow> scan_rows(const ParityInterferometer& ifm, const Input& input,
                               std::span<const double> thetas) {
  require_ascending(thetas);
  std::vector<ScanRow> rows(thetas.size());
  detail::parallel_for(thetas.size(), [&](std::size_t i) { rows[i] = ifm.run(input, thetas[i]); });
  return rows;
}

}  // namespace

std::vector<ScanRow> ParityInterferometer::scan(const StateVector& psi0,
                                                std::span<const double> thetas) const {
  return scan_rows(*this, psi0, thetas);
}

std::vector<ScanRow> ParityInterferometer::scan(const Mixture& mix,
                                                std::span<const double> thetas) const {
  return scan_rows(*this, mix, thetas);
}

StateVector phase_imprint(const StateVector& psi, double theta) {
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (std::size_t i = 0; i < amps.size(); ++i)
    amps[i] *= std::polar(1.0, -psi.basis().m_z(i) * theta);
  return StateVector(psi.basis(), std::move(amps));
}

StateVector beam_splitter(const StateVector& psi) {
  return apply_unitary(rotation_about_x(psi.basis().atoms(), std::numbers::pi / 2.0), psi);
}

std::pair<double, double> parity_stats(const StateVector& psi) {
  // 1 - <P>^2 = 4 w_even w_odd for a normalized pure state; this form keeps
  // sigma_P accurate near the extrema where 1 - <P>^2 cancels.
  double even = 0.0, odd = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) (i % 2 == 0 ? even : odd) += std::norm(psi[i]);
  const double total = even + odd;
  return {(even - odd) / total, 2.0 * std::sqrt(even * odd) / total};
}

double parity_derivative(const StateVector& psi2) {
  return ParityInterferometer(psi2.basis().atoms()).parity_derivative(psi2);
}

ScanRow run_pipeline(const StateVector& psi0, double theta) {
  return ParityInterferometer(psi0.basis().atoms()).run(psi0, theta);
}

std::vector<ScanRow> scan(const StateVector& psi0, std::span<const double> thetas) {
  return ParityInterferometer(psi0.basis().atoms()).scan(psi0, thetas);
}

double mixture_parity(const Mixture& mix, double theta) {
  const ParityInterferometer ifm(mix.basis().atoms());
  double p = 0.0;
  for (const auto& [w, psi] : mix.components())
    p += w * ifm.parity_stats(ifm.output_state(psi, theta)).first;
  return p;
}

double analytic_cat_parity(int atoms, double theta) {
  TwoModeBasis{atoms};
  return std::cos(atoms * (theta + std::numbers::pi / 2.0));
}

double perturbative_parity(const ModelParams& p, double theta) {
  p.validate();
  if (p.atoms <= 2)
    throw DomainError("the second-order parity formula holds only for N > 2 (got N=" +
                      std::to_string(p.atoms) + ")");
  if (p.interaction == 0.0)
    throw DomainError("the second-order parity formula expands in J/U and needs U != 0");
  const double n = p.atoms;
  const double c =
      n * p.tunneling * p.tunneling / (4.0 * (n - 1.0) * (n - 1.0) * p.interaction * p.interaction);
  const double offset = n * std::numbers::pi / 2.0;
  return (1.0 - c) * std::cos(n * theta + offset) - c * std::cos((n - 2.0) * theta + offset);
}

std::vector<double> linear_grid(double start, double stop, std::size_t count) {
  if (count < 2) throw DomainError("grid needs at least 2 points");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start))
    throw DomainError("grid needs finite start < stop");
  std::vector<double> out(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  out.back() = stop;
  return out;
}

}  // namespace dwcat
