#include "dwcat/model.hpp"

#include "parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dwcat {

void ModelParams::validate() const {
  TwoModeBasis{atoms};
  if (!std::isfinite(tunneling) || !std::isfinite(interaction) || !std::isfinite(detuning))
    throw DomainError("model couplings must be finite");
}

TridiagSymmetric build_hamiltonian(const ModelParams& p) {
  p.validate();
  const TwoModeBasis basis(p.atoms);
  const std::size_t d = basis.dim();
  const double n = p.atoms;
  TridiagSymmetric h;
  h.diag.resize(d);
  h.offdiag.resize(d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    const double m = basis.m_z(i);
    h.diag[i] = 2.0 * p.interaction * m * m + p.detuning * m;
  }
  // -2J times the S_x element sqrt((i+1)(N-i))/2
  for (std::size_t i = 0; i + 1 < d; ++i)
    h.offdiag[i] =
        -p.tunneling * std::sqrt((static_cast<double>(i) + 1.0) * (n - static_cast<double>(i)));
  return h;
}

std::string_view to_string(SwapSector s) {
  switch (s) {
    case SwapSector::symmetric: return "symmetric";
    case SwapSector::antisymmetric: return "antisymmetric";
    case SwapSector::none: return "none";
  }
  return "none";
}

SwapBlocks swap_blocks(const ModelParams& p) {
  if (p.detuning != 0.0)
    throw DomainError("swap blocking needs zero detuning; the bias breaks left/right symmetry");
  const TridiagSymmetric h = build_hamiltonian(p);
  const std::size_t n = static_cast<std::size_t>(p.atoms);
  const std::size_t pairs = (n + 1) / 2;
  const bool even = n % 2 == 0;

  SwapBlocks b;
  b.symmetric.diag.assign(h.diag.begin(), h.diag.begin() + static_cast<std::ptrdiff_t>(pairs));
  b.symmetric.offdiag.assign(h.offdiag.begin(),
                             h.offdiag.begin() + static_cast<std::ptrdiff_t>(pairs - 1));
  b.antisymmetric = b.symmetric;
  if (even) {
    // e_{N/2} is its own mirror image and joins the symmetric block only.
    b.symmetric.diag.push_back(h.diag[pairs]);
    b.symmetric.offdiag.push_back(std::numbers::sqrt2 * h.offdiag[pairs - 1]);
  } else {
    // The innermost pair (P-1, P) is coupled directly by offdiag[P-1].
    b.symmetric.diag[pairs - 1] += h.offdiag[pairs - 1];
    b.antisymmetric.diag[pairs - 1] -= h.offdiag[pairs - 1];
  }
  return b;
}

namespace {

StateVector expand_sector(const TwoModeBasis& basis, const std::vector<double>& v,
                          SwapSector sector) {
  const std::size_t n = static_cast<std::size_t>(basis.atoms());
  const std::size_t pairs = (n + 1) / 2;
  const double sign = sector == SwapSector::symmetric ? 1.0 : -1.0;
  std::vector<double> full(basis.dim(), 0.0);
  for (std::size_t k = 0; k < pairs; ++k) {
    full[k] = v[k] / std::numbers::sqrt2;
    full[n - k] = sign * v[k] / std::numbers::sqrt2;
  }
  if (sector == SwapSector::symmetric && n % 2 == 0) full[pairs] = v[pairs];
  fix_sign(full);
  return StateVector(basis, std::vector<Complex>(full.begin(), full.end()));
}

StateVector to_state(const TwoModeBasis& basis, const std::vector<double>& v) {
  return StateVector(basis, std::vector<Complex>(v.begin(), v.end()));
}

struct Level {
  double energy;
  SwapSector sector;
  std::size_t index;
};

}  // namespace

GroundSolution ground_and_gap(const ModelParams& p) {
  p.validate();
  const TwoModeBasis basis(p.atoms);

  if (p.detuning != 0.0) {
    const EigenDecomposition eig = tridiag_eigen(build_hamiltonian(p));
    return GroundSolution{eig.values[0],
                          eig.values[1],
                          eig.values[1] - eig.values[0],
                          to_state(basis, eig.vectors[0]),
                          to_state(basis, eig.vectors[1]),
                          SwapSector::none,
                          SwapSector::none};
  }

  const SwapBlocks blocks = swap_blocks(p);
  const EigenDecomposition sym = tridiag_eigen(blocks.symmetric);
  const EigenDecomposition anti = tridiag_eigen(blocks.antisymmetric);

  const Level s0{sym.values[0], SwapSector::symmetric, 0};
  const Level a0{anti.values[0], SwapSector::antisymmetric, 0};
  Level ground = s0, excited = a0;
  if (a0.energy < s0.energy) {
    ground = a0;
    excited = s0;
    if (anti.values.size() > 1 && anti.values[1] < excited.energy)
      excited = {anti.values[1], SwapSector::antisymmetric, 1};
  } else if (sym.values.size() > 1 && sym.values[1] < excited.energy) {
    excited = {sym.values[1], SwapSector::symmetric, 1};
  }

  auto state_of = [&](const Level& lv) {
    const auto& eig = lv.sector == SwapSector::symmetric ? sym : anti;
    return expand_sector(basis, eig.vectors[lv.index], lv.sector);
  };
  return GroundSolution{ground.energy,  excited.energy,  excited.energy - ground.energy,
                        state_of(ground), state_of(excited), ground.sector,
                        excited.sector};
}

std::optional<double> chi(const ModelParams& p) {
  p.validate();
  if (p.interaction == 0.0) return std::nullopt;
  return p.tunneling * p.tunneling / (p.atoms * p.interaction * p.interaction);
}

double interaction_for_chi(int atoms, double tunneling, double chi_value) {
  TwoModeBasis{atoms};
  if (!(chi_value > 0.0))
    throw DomainError("chi must be positive (got " + std::to_string(chi_value) + ")");
  if (std::isinf(chi_value)) return 0.0;
  return -std::abs(tunneling) / std::sqrt(atoms * chi_value);
}

double collapse_atom_bound(double trap_frequency, double tunneling) {
  if (!(trap_frequency > 0.0) || !(tunneling > 0.0) || !std::isfinite(trap_frequency) ||
      !std::isfinite(tunneling))
    throw DomainError("trap frequency and tunneling must both be positive and finite");
  const double ratio = trap_frequency / tunneling;
  return ratio * ratio;
}

std::vector<GapRow> gap_scan(std::span<const int> atom_counts, std::span<const double> chis,
                             double tunneling) {
  struct Job {
    int atoms;
    double chi;
    double interaction;
  };
  std::vector<Job> jobs;
  jobs.reserve(atom_counts.size() * chis.size());
  for (int n : atom_counts)
    for (double c : chis) jobs.push_back({n, c, interaction_for_chi(n, tunneling, c)});

  std::vector<GapRow> rows(jobs.size());
  detail::parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    const GroundSolution g =
        ground_and_gap(ModelParams{job.atoms, tunneling, job.interaction, 0.0});
    rows[i] = GapRow{job.atoms, job.chi, job.interaction, g.e0, g.e1, g.gap,
                     g.gap < kGapUnderflow * std::abs(g.e0)};
  });
  return rows;
}

std::vector<double> log_grid(double log10_start, double log10_stop, std::size_t count) {
  if (count < 2) throw DomainError("grid needs at least 2 points");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = std::pow(10.0, log10_start + t * (log10_stop - log10_start));
  }
  return out;
}

}  // namespace dwcat
