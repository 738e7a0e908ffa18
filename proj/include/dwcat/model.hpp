#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dwcat/eigen.hpp"
#include "dwcat/state.hpp"

namespace dwcat {

/// Two-site Bose-Hubbard parameters, angular-frequency units with hbar = 1.
///
///   H = -2 J S_x + 2 U S_z^2 + eps S_z
///
/// This is the number-conserving Hamiltonian
///   -J (b_l^+ b_r + h.c.) + U (b_l^+ b_l^+ b_l b_l + b_r^+ b_r^+ b_r b_r)
///   + (eps/2) (n_l - n_r)
/// minus the constant U (N^2/2 - N). The constant is never added back; it
/// shifts every level equally and drops out of gaps, states and observables.
struct ModelParams {
  int atoms = 2;
  double tunneling = 1.0;    // J
  double interaction = 0.0;  // U, attractive when negative
  double detuning = 0.0;     // eps, energy difference between the wells

  /// Throws DomainError for atoms < 2 or non-finite couplings.
  void validate() const;

  /// True for repulsive interactions (U > 0), outside the regime the
  /// cat-state analysis is about. Still computable.
  bool repulsive() const noexcept { return interaction > 0.0; }
};

TridiagSymmetric build_hamiltonian(const ModelParams& p);

/// Symmetry sector under the left/right swap i -> N - i.
enum class SwapSector { symmetric, antisymmetric, none };

std::string_view to_string(SwapSector s);

struct GroundSolution {
  double e0;
  double e1;
  double gap;
  StateVector psi0;
  StateVector psi1;
  SwapSector sector0;
  SwapSector sector1;
};

/// Ground state, first excited state and their splitting.
///
/// For eps == 0 the Hamiltonian commutes with the swap, so it is split into a
/// symmetric block on (e_k + e_{N-k})/sqrt(2) (plus e_{N/2} for even N) and an
/// antisymmetric block on (e_k - e_{N-k})/sqrt(2). Each block is solved on its
/// own and the gap is a difference of sector eigenvalues, which keeps the two
/// near-degenerate cat-like states apart long after a full-matrix solve would
/// mix them. On exact ties the symmetric state is reported as the ground state.
GroundSolution ground_and_gap(const ModelParams& p);

/// Both swap blocks of an eps == 0 Hamiltonian as tridiagonal matrices.
struct SwapBlocks {
  TridiagSymmetric symmetric;
  TridiagSymmetric antisymmetric;
};

/// Throws DomainError unless detuning == 0.
SwapBlocks swap_blocks(const ModelParams& p);

/// J^2 / (N U^2). Empty for U == 0, where the figure of merit is infinite.
std::optional<double> chi(const ModelParams& p);

/// Attractive interaction that realizes a given chi: U = -J / sqrt(N chi).
/// chi = +inf maps to U = 0.
double interaction_for_chi(int atoms, double tunneling, double chi_value);

/// Rough upper bound (omega / J)^2 on the atom number before the attractive
/// condensate collapses. Throws DomainError unless both inputs are positive.
double collapse_atom_bound(double trap_frequency, double tunneling);

struct GapRow {
  int atoms;
  double chi;  // +inf for the non-interacting column
  double interaction;
  double e0;
  double e1;
  double gap;
  /// gap < kGapUnderflow * |E0|: below what double precision can resolve.
  bool underflow;
};

inline constexpr double kGapUnderflow = 1e-13;

/// One row per (N, chi), ordered by N then chi in the order given.
/// Rows are independent and are evaluated concurrently.
std::vector<GapRow> gap_scan(std::span<const int> atom_counts, std::span<const double> chis,
                             double tunneling);

/// 10^start ... 10^stop, `count` points evenly spaced in the exponent.
std::vector<double> log_grid(double log10_start, double log10_stop, std::size_t count);

}  // namespace dwcat
