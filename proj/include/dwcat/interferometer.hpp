#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dwcat/linalg.hpp"
#include "dwcat/model.hpp"
#include "dwcat/spinalg.hpp"
#include "dwcat/state.hpp"

namespace dwcat {

/// How sigma_theta in a ScanRow was obtained.
enum class SigmaFlag {
  ok,        ///< sigma_P / |P'| evaluated directly
  limit,     ///< 0/0 at an extremum; value is the average over theta +- kLimitOffset
  singular,  ///< only P' vanishes; sigma_theta is +inf and precision_norm is 0
};

std::string_view to_string(SigmaFlag f);

/// One point of a parity interferometry scan.
struct ScanRow {
  double theta;
  double parity;        ///< <P>
  double sigma_parity;  ///< sqrt(<P^2> - <P>^2)
  double parity_deriv;  ///< d<P>/dtheta
  double sigma_theta;   ///< sigma_P / |P'|
  double precision_norm;  ///< 1 / (N sigma_theta); 1 is the Heisenberg limit
  SigmaFlag flag;
};

inline constexpr double kDerivativeZero = 1e-12;
inline constexpr double kSigmaZero = 1e-9;
inline constexpr double kLimitOffset = 1e-6;
inline constexpr double kImaginaryResidualMax = 1e-8;

/// Incoherent mixture of pure states, weights non-negative and summing to 1.
class Mixture {
 public:
  /// Throws DomainError for negative weights, weights not summing to 1 within
  /// 1e-12, mixed bases or an empty list.
  explicit Mixture(std::vector<std::pair<double, StateVector>> components);

  /// Zero-temperature mixture of the two cats, (|S><S| + |A><A|) / 2.
  static Mixture thermal_cats(int atoms);

  const std::vector<std::pair<double, StateVector>>& components() const noexcept {
    return components_;
  }
  const TwoModeBasis& basis() const noexcept { return components_.front().second.basis(); }

 private:
  std::vector<std::pair<double, StateVector>> components_;
};

/// Phase imprint -> pi/2 beam splitter -> parity readout for one atom number.
/// Holds the beam-splitter matrix so scans only build it once.
class ParityInterferometer {
 public:
  explicit ParityInterferometer(int atoms);

  const TwoModeBasis& basis() const noexcept { return spin_.basis; }
  const ComplexMatrix& beam_splitter_matrix() const noexcept { return splitter_; }
  const SpinOperators& spin() const noexcept { return spin_; }

  StateVector imprint(const StateVector& psi, double theta) const;
  StateVector split(const StateVector& psi) const;
  /// Final state R U(theta) |psi0>.
  StateVector output_state(const StateVector& psi0, double theta) const;

  /// (<P>, sigma_P) in the final state.
  std::pair<double, double> parity_stats(const StateVector& final_state) const;
  /// -i <[S_y, P]> in the final state.
  double parity_derivative(const StateVector& final_state) const;

  ScanRow run(const StateVector& psi0, double theta) const;
  ScanRow run(const Mixture& mix, double theta) const;

  /// Rows are computed concurrently; the output order follows `thetas`.
  std::vector<ScanRow> scan(const StateVector& psi0, std::span<const double> thetas) const;
  std::vector<ScanRow> scan(const Mixture& mix, std::span<const double> thetas) const;

 private:
  struct Signal {
    double parity;
    double sigma;
    double deriv;
  };
  Signal signal(const StateVector& psi0, double theta) const;
  Signal signal(const Mixture& mix, double theta) const;

  template <typename Input>
  ScanRow make_row(const Input& input, double theta) const;
  void require_basis(const TwoModeBasis& b) const;

  SpinOperators spin_;
  ParityOperator parity_;
  ComplexMatrix splitter_;
};

/// e^{-i theta S_z} |psi>.
StateVector phase_imprint(const StateVector& psi, double theta);

/// e^{-i (pi/2) S_x} |psi>.
StateVector beam_splitter(const StateVector& psi);

/// (<P>, sigma_P) for a pure state.
std::pair<double, double> parity_stats(const StateVector& psi);

/// P'(theta) = -i <psi2|[S_y, P]|psi2> for the post-splitter state psi2.
/// Throws NumericalError if the imaginary part exceeds kImaginaryResidualMax.
double parity_derivative(const StateVector& psi2);

ScanRow run_pipeline(const StateVector& psi0, double theta);

/// Throws DomainError for an empty or non-ascending grid.
std::vector<ScanRow> scan(const StateVector& psi0, std::span<const double> thetas);

double mixture_parity(const Mixture& mix, double theta);

/// cos[N (theta + pi/2)], the ideal cat signal.
double analytic_cat_parity(int atoms, double theta);

/// Parity signal to second order in J/U for the ground state:
///   (1 - c) cos[N theta + N pi/2] - c cos[(N-2) theta + N pi/2],
///   c = N J^2 / (4 (N-1)^2 U^2).
/// Throws DomainError for N <= 2 or U == 0.
double perturbative_parity(const ModelParams& p, double theta);

/// `count` evenly spaced points from start to stop, both included.
std::vector<double> linear_grid(double start, double stop, std::size_t count);

}  // namespace dwcat
