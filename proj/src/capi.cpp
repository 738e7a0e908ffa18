#include "dwcat/dwcat.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "dwcat/interferometer.hpp"
#include "dwcat/model.hpp"
#include "dwcat/spinalg.hpp"
#include "dwcat/verify.hpp"

struct dwcat_state {
  dwcat::StateVector value;
};

struct dwcat_ground {
  dwcat::GroundSolution value;
};

struct dwcat_scan {
  std::vector<dwcat::ScanRow> rows;
};

struct dwcat_gap_table {
  std::vector<dwcat::GapRow> rows;
};

struct dwcat_report {
  dwcat::VerifyReport value;
};

namespace {

thread_local std::string last_error;

dwcat_status fail(dwcat_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body and maps the C++ exception hierarchy onto status codes.
template <typename Body>
dwcat_status guarded(Body&& body) noexcept {
  try {
    body();
    return DWCAT_OK;
  } catch (const dwcat::DomainError& e) {
    return fail(DWCAT_ERR_DOMAIN, e.what());
  } catch (const dwcat::DimensionError& e) {
    return fail(DWCAT_ERR_DIMENSION, e.what());
  } catch (const dwcat::NumericalError& e) {
    return fail(DWCAT_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DWCAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DWCAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DWCAT_ERR_INTERNAL, "unknown error");
  }
}

dwcat::ModelParams to_params(const dwcat_model_params& p) {
  return {p.atoms, p.tunneling, p.interaction, p.detuning};
}

dwcat_scan_row to_c(const dwcat::ScanRow& r) {
  dwcat_sigma_flag flag = DWCAT_SIGMA_OK;
  if (r.flag == dwcat::SigmaFlag::limit) flag = DWCAT_SIGMA_LIMIT;
  if (r.flag == dwcat::SigmaFlag::singular) flag = DWCAT_SIGMA_SINGULAR;
  return {r.theta, r.parity, r.sigma_parity, r.parity_deriv, r.sigma_theta, r.precision_norm,
          flag};
}

dwcat_sector to_c(dwcat::SwapSector s) {
  switch (s) {
    case dwcat::SwapSector::symmetric: return DWCAT_SECTOR_SYMMETRIC;
    case dwcat::SwapSector::antisymmetric: return DWCAT_SECTOR_ANTISYMMETRIC;
    case dwcat::SwapSector::none: break;
  }
  return DWCAT_SECTOR_NONE;
}

#define DWCAT_REQUIRE(ptr) \
  if (!(ptr)) return fail(DWCAT_ERR_NULL, #ptr " must not be NULL")

}  // namespace

extern "C" {

const char* dwcat_version(void) { return "0.1.0"; }

const char* dwcat_last_error(void) { return last_error.c_str(); }

const char* dwcat_status_string(dwcat_status status) {
  switch (status) {
    case DWCAT_OK: return "ok";
    case DWCAT_ERR_DOMAIN: return "domain error";
    case DWCAT_ERR_DIMENSION: return "dimension error";
    case DWCAT_ERR_NUMERICAL: return "numerical error";
    case DWCAT_ERR_NULL: return "null argument";
    case DWCAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

dwcat_status dwcat_state_cat(int atoms, double phi, dwcat_state** out) {
  DWCAT_REQUIRE(out);
  return guarded([&] { *out = new dwcat_state{dwcat::cat_state(atoms, phi)}; });
}

dwcat_status dwcat_state_from_amplitudes(int atoms, const double* re_im, dwcat_state** out) {
  DWCAT_REQUIRE(re_im);
  DWCAT_REQUIRE(out);
  return guarded([&] {
    const dwcat::TwoModeBasis basis(atoms);
    std::vector<dwcat::Complex> amps(basis.dim());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = new dwcat_state{dwcat::StateVector(basis, std::move(amps))};
  });
}

int dwcat_state_atoms(const dwcat_state* state) {
  return state ? state->value.basis().atoms() : 0;
}

dwcat_status dwcat_state_amplitudes(const dwcat_state* state, double* re_im, size_t capacity) {
  DWCAT_REQUIRE(state);
  DWCAT_REQUIRE(re_im);
  const auto amps = state->value.amplitudes();
  if (capacity < 2 * amps.size())
    return fail(DWCAT_ERR_DIMENSION, "amplitude buffer too small");
  for (std::size_t i = 0; i < amps.size(); ++i) {
    re_im[2 * i] = amps[i].real();
    re_im[2 * i + 1] = amps[i].imag();
  }
  return DWCAT_OK;
}

void dwcat_state_free(dwcat_state* state) { delete state; }

dwcat_status dwcat_ground_state(const dwcat_model_params* params, dwcat_ground** out) {
  DWCAT_REQUIRE(params);
  DWCAT_REQUIRE(out);
  return guarded([&] { *out = new dwcat_ground{dwcat::ground_and_gap(to_params(*params))}; });
}

double dwcat_ground_e0(const dwcat_ground* g) {
  return g ? g->value.e0 : std::numeric_limits<double>::quiet_NaN();
}
double dwcat_ground_e1(const dwcat_ground* g) {
  return g ? g->value.e1 : std::numeric_limits<double>::quiet_NaN();
}
double dwcat_ground_gap(const dwcat_ground* g) {
  return g ? g->value.gap : std::numeric_limits<double>::quiet_NaN();
}

dwcat_sector dwcat_ground_sector(const dwcat_ground* g, int level) {
  if (!g) return DWCAT_SECTOR_NONE;
  return to_c(level == 0 ? g->value.sector0 : g->value.sector1);
}

dwcat_status dwcat_ground_state_vector(const dwcat_ground* g, int level, dwcat_state** out) {
  DWCAT_REQUIRE(g);
  DWCAT_REQUIRE(out);
  if (level != 0 && level != 1) return fail(DWCAT_ERR_DIMENSION, "level must be 0 or 1");
  return guarded(
      [&] { *out = new dwcat_state{level == 0 ? g->value.psi0 : g->value.psi1}; });
}

void dwcat_ground_free(dwcat_ground* g) { delete g; }

dwcat_status dwcat_chi(const dwcat_model_params* params, double* chi, int* is_infinite) {
  DWCAT_REQUIRE(params);
  DWCAT_REQUIRE(chi);
  return guarded([&] {
    const std::optional<double> c = dwcat::chi(to_params(*params));
    *chi = c.value_or(std::numeric_limits<double>::infinity());
    if (is_infinite) *is_infinite = c ? 0 : 1;
  });
}

dwcat_status dwcat_collapse_atom_bound(double trap_frequency, double tunneling, double* out) {
  DWCAT_REQUIRE(out);
  return guarded([&] { *out = dwcat::collapse_atom_bound(trap_frequency, tunneling); });
}

dwcat_status dwcat_scan_state(const dwcat_state* psi0, const double* thetas, size_t count,
                              dwcat_scan** out) {
  DWCAT_REQUIRE(psi0);
  DWCAT_REQUIRE(thetas);
  DWCAT_REQUIRE(out);
  return guarded([&] {
    const dwcat::ParityInterferometer ifm(psi0->value.basis().atoms());
    *out = new dwcat_scan{ifm.scan(psi0->value, std::span<const double>(thetas, count))};
  });
}

dwcat_status dwcat_scan_thermal(int atoms, const double* thetas, size_t count,
                                dwcat_scan** out) {
  DWCAT_REQUIRE(thetas);
  DWCAT_REQUIRE(out);
  return guarded([&] {
    const dwcat::ParityInterferometer ifm(atoms);
    *out = new dwcat_scan{
        ifm.scan(dwcat::Mixture::thermal_cats(atoms), std::span<const double>(thetas, count))};
  });
}

size_t dwcat_scan_size(const dwcat_scan* scan) { return scan ? scan->rows.size() : 0; }

dwcat_status dwcat_scan_get(const dwcat_scan* scan, size_t index, dwcat_scan_row* row) {
  DWCAT_REQUIRE(scan);
  DWCAT_REQUIRE(row);
  if (index >= scan->rows.size()) return fail(DWCAT_ERR_DIMENSION, "scan row index out of range");
  *row = to_c(scan->rows[index]);
  return DWCAT_OK;
}

void dwcat_scan_free(dwcat_scan* scan) { delete scan; }

dwcat_status dwcat_analytic_cat_parity(int atoms, double theta, double* out) {
  DWCAT_REQUIRE(out);
  return guarded([&] { *out = dwcat::analytic_cat_parity(atoms, theta); });
}

dwcat_status dwcat_perturbative_parity(const dwcat_model_params* params, double theta,
                                       double* out) {
  DWCAT_REQUIRE(params);
  DWCAT_REQUIRE(out);
  return guarded([&] { *out = dwcat::perturbative_parity(to_params(*params), theta); });
}

dwcat_status dwcat_linear_grid(double start, double stop, size_t count, double* out) {
  DWCAT_REQUIRE(out);
  return guarded([&] {
    const auto grid = dwcat::linear_grid(start, stop, count);
    std::copy(grid.begin(), grid.end(), out);
  });
}

dwcat_status dwcat_log_grid(double log10_start, double log10_stop, size_t count, double* out) {
  DWCAT_REQUIRE(out);
  return guarded([&] {
    const auto grid = dwcat::log_grid(log10_start, log10_stop, count);
    std::copy(grid.begin(), grid.end(), out);
  });
}

dwcat_status dwcat_gap_scan(const int* atom_counts, size_t n_atoms, const double* chis,
                            size_t n_chis, double tunneling, dwcat_gap_table** out) {
  DWCAT_REQUIRE(atom_counts);
  DWCAT_REQUIRE(chis);
  DWCAT_REQUIRE(out);
  return guarded([&] {
    *out = new dwcat_gap_table{dwcat::gap_scan(std::span<const int>(atom_counts, n_atoms),
                                               std::span<const double>(chis, n_chis),
                                               tunneling)};
  });
}

size_t dwcat_gap_table_size(const dwcat_gap_table* table) {
  return table ? table->rows.size() : 0;
}

dwcat_status dwcat_gap_table_get(const dwcat_gap_table* table, size_t index, dwcat_gap_row* row) {
  DWCAT_REQUIRE(table);
  DWCAT_REQUIRE(row);
  if (index >= table->rows.size()) return fail(DWCAT_ERR_DIMENSION, "gap row index out of range");
  const dwcat::GapRow& r = table->rows[index];
  *row = {r.atoms, r.chi, r.interaction, r.e0, r.e1, r.gap, r.underflow ? 1 : 0};
  return DWCAT_OK;
}

void dwcat_gap_table_free(dwcat_gap_table* table) { delete table; }

dwcat_status dwcat_verify(unsigned flags, dwcat_check_callback callback, void* user,
                          dwcat_report** out) {
  DWCAT_REQUIRE(out);
  return guarded([&] {
    dwcat::VerifyOptions options;
    options.quick = (flags & DWCAT_VERIFY_QUICK) != 0;
    options.inject_sy_sign_error = (flags & DWCAT_VERIFY_INJECT_SY_SIGN) != 0;
    auto report = dwcat::run_verify(options, [&](const dwcat::CheckResult& c) {
      if (callback) callback(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), c.seconds, user);
    });
    *out = new dwcat_report{std::move(report)};
  });
}

size_t dwcat_report_size(const dwcat_report* report) {
  return report ? report->value.checks.size() : 0;
}

int dwcat_report_all_passed(const dwcat_report* report) {
  return report && report->value.all_passed() ? 1 : 0;
}

const char* dwcat_report_name(const dwcat_report* report, size_t index) {
  if (!report || index >= report->value.checks.size()) return nullptr;
  return report->value.checks[index].name.c_str();
}

int dwcat_report_passed(const dwcat_report* report, size_t index) {
  if (!report || index >= report->value.checks.size()) return 0;
  return report->value.checks[index].passed ? 1 : 0;
}

const char* dwcat_report_detail(const dwcat_report* report, size_t index) {
  if (!report || index >= report->value.checks.size()) return nullptr;
  return report->value.checks[index].detail.c_str();
}

void dwcat_report_free(dwcat_report* report) { delete report; }

}  // extern "C"
