#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "dwcat/model.hpp"
#include "dwcat/oracle.hpp"
#include "dwcat/spinalg.hpp"
#include "support.hpp"

namespace dwcat {
namespace {

EigenDecomposition dense(const ModelParams& p) {
  return oracle::jacobi_eigen(oracle::DenseSymmetric::from_tridiag(build_hamiltonian(p)));
}

TEST(Params, Validation) {
  EXPECT_THROW((ModelParams{1, 1.0, -1.0, 0.0}).validate(), DomainError);
  EXPECT_THROW((ModelParams{4, std::nan(""), -1.0, 0.0}).validate(), DomainError);
  EXPECT_THROW((ModelParams{4, 1.0, -INFINITY, 0.0}).validate(), DomainError);
  EXPECT_NO_THROW((ModelParams{4, 1.0, 2.0, 0.5}).validate());
  EXPECT_TRUE((ModelParams{4, 1.0, 2.0, 0.0}).repulsive());
  EXPECT_FALSE((ModelParams{4, 1.0, 0.0, 0.0}).repulsive());
  EXPECT_THROW(ground_and_gap({1, 1.0, -1.0, 0.0}), DomainError);
}

TEST(Hamiltonian, MatrixElements) {
  const auto h = build_hamiltonian({2, 0.0, -1.0, 0.0});
  EXPECT_EQ(h.diag, (std::vector<double>{-2.0, 0.0, -2.0}));
  const auto g = ground_and_gap({2, 0.0, -1.0, 0.0});
  EXPECT_DOUBLE_EQ(g.e0, -2.0);  // N^2 U / 2

  const auto t = build_hamiltonian({5, 0.7, -0.3, 0.2});
  for (int i = 0; i <= 5; ++i) {
    const double m = i - 2.5;
    EXPECT_DOUBLE_EQ(t.diag[i], 2 * -0.3 * m * m + 0.2 * m);
  }
  for (int i = 0; i < 5; ++i)
    EXPECT_NEAR(t.offdiag[i], -0.7 * std::sqrt((i + 1.0) * (5 - i)), 1e-15);
}

TEST(Hamiltonian, NonInteractingSpectrum) {
  const auto e = tridiag_eigen(build_hamiltonian({3, 1.0, 0.0, 0.0}));
  const std::vector<double> want{-3, -1, 1, 3};
  EXPECT_LE(test::max_abs_diff(e.values, want), 1e-14);
}

TEST(GroundAndGap, NineAtomsMatchesDenseOracle) {
  const ModelParams p{9, 1.0, -1.0, 0.0};
  const auto g = ground_and_gap(p);
  const auto o = dense(p);
  EXPECT_NEAR(g.gap, o.values[1] - o.values[0], 1e-12);
  EXPECT_NEAR(g.e0, o.values[0], 1e-12);
}

TEST(GroundAndGap, ExactDegeneracyWithoutTunneling) {
  const auto g = ground_and_gap({5, 0.0, -1.0, 0.0});
  EXPECT_EQ(g.gap, 0.0);
  EXPECT_DOUBLE_EQ(g.e0, 2 * -1.0 * 2.5 * 2.5);
  for (const auto* psi : {&g.psi0, &g.psi1}) {
    const double w = std::norm((*psi)[0]) + std::norm((*psi)[5]);
    EXPECT_NEAR(w, 1.0, 1e-15);
  }
  EXPECT_EQ(g.sector0, SwapSector::symmetric);
  EXPECT_EQ(g.sector1, SwapSector::antisymmetric);
}

TEST(GroundAndGap, NonInteractingGap) {
  EXPECT_NEAR(ground_and_gap({4, 1.0, 0.0, 0.0}).gap, 2.0, 1e-12);
  for (int n = 2; n <= 15; ++n) {
    const auto g = ground_and_gap({n, 1.0, 0.0, 0.0});
    EXPECT_NEAR(g.gap, 2.0, 1e-12) << n;
    EXPECT_NEAR(g.e0, -n, 1e-12) << n;
    for (int i = 0; i <= n; ++i)
      EXPECT_NEAR(std::abs(g.psi0[i]), binomial_amplitude(n, i), 1e-12);
  }
}

TEST(GroundAndGap, OverlapWithSymmetricCatMatchesOracle) {
  const ModelParams p{9, 1.0, -0.25, 0.0};
  const auto g = ground_and_gap(p);
  const auto o = dense(p);
  const auto cat = cat_state(9, 0.0);
  double oracle_overlap = 0.0;
  for (int i = 0; i <= 9; ++i) oracle_overlap += o.vectors[0][i] * cat[i].real();
  EXPECT_NEAR(std::norm(cat.overlap(g.psi0)), oracle_overlap * oracle_overlap, 1e-10);
}

TEST(GroundAndGap, StatesOrthonormalAndEigen) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const ModelParams p{2 + trial % 14, u(rng), u(rng), trial % 3 == 0 ? u(rng) : 0.0};
    const auto g = ground_and_gap(p);
    EXPECT_LE(g.e0, g.e1);
    EXPECT_GE(g.gap, 0.0);
    EXPECT_NEAR(std::abs(g.psi0.overlap(g.psi1)), 0.0, 1e-10);
    const auto h = build_hamiltonian(p);
    const double scale = std::max(1.0, h.gershgorin_radius());
    for (const auto& [psi, e] : {std::pair{&g.psi0, g.e0}, std::pair{&g.psi1, g.e1}}) {
      auto r = h.apply(psi->amplitudes());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= e * (*psi)[i];
      EXPECT_LE(euclidean_norm(r), 1e-11 * scale) << trial;
    }
    if (p.detuning != 0.0) {
      EXPECT_EQ(g.sector0, SwapSector::none);
      EXPECT_EQ(g.sector1, SwapSector::none);
    }
  }
}

TEST(GroundAndGap, SwapSymmetryOfGroundState) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 14;
    const auto g = ground_and_gap({n, u(rng), u(rng), 0.0});
    const double s = g.sector0 == SwapSector::symmetric ? 1.0 : -1.0;
    for (int i = 0; i <= n; ++i) EXPECT_NEAR(std::abs(g.psi0[i] - s * g.psi0[n - i]), 0.0, 1e-10);
  }
}

TEST(SwapBlocks, MergedSpectrumEqualsFull) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 2; n <= 15; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const ModelParams p{n, u(rng), u(rng), 0.0};
      const auto b = swap_blocks(p);
      EXPECT_EQ(b.symmetric.dim() + b.antisymmetric.dim(), static_cast<std::size_t>(n + 1));
      auto merged = tridiag_eigen(b.symmetric).values;
      const auto anti = tridiag_eigen(b.antisymmetric).values;
      merged.insert(merged.end(), anti.begin(), anti.end());
      std::sort(merged.begin(), merged.end());
      const auto h = build_hamiltonian(p);
      const auto full = tridiag_eigen(h).values;
      EXPECT_LE(test::max_abs_diff(merged, full), 1e-12 * std::max(1.0, h.gershgorin_radius()));
    }
  EXPECT_THROW(swap_blocks({4, 1.0, -1.0, 0.1}), DomainError);
}

TEST(GroundAndGap, SectorsKeepCatsApartBelowResolution) {
  // the true gap (~1e-20) is far below |E0| eps; blocking still returns
  // the symmetric and antisymmetric cats instead of an arbitrary mix
  const auto g = ground_and_gap({9, 1.0, -300.0, 0.0});
  EXPECT_GE(g.gap, 0.0);
  EXPECT_LT(g.gap, kGapUnderflow * std::abs(g.e0));
  EXPECT_EQ(g.sector0, SwapSector::symmetric);
  EXPECT_EQ(g.sector1, SwapSector::antisymmetric);
  EXPECT_GT(std::norm(cat_state(9, 0.0).overlap(g.psi0)), 1.0 - 1e-4);
  EXPECT_GT(std::norm(cat_state(9, test::kPi).overlap(g.psi1)), 1.0 - 1e-4);
}

TEST(GroundAndGap, SmallGapMatchesSectorDifference) {
  // N=5, U=-30: gap ~1e-5, resolved to full relative precision by blocking
  const ModelParams p{5, 1.0, -30.0, 0.0};
  const auto g = ground_and_gap(p);
  const auto b = swap_blocks(p);
  const double want = tridiag_eigen(b.antisymmetric).values[0] - tridiag_eigen(b.symmetric).values[0];
  EXPECT_GT(g.gap, 0.0);
  EXPECT_EQ(g.gap, want);
}

TEST(Chi, ReferenceValues) {
  EXPECT_NEAR(*chi({9, 1.0, -1.0, 0.0}), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(*chi({9, 1.0, -0.25, 0.0}), 16.0 / 9.0, 1e-15);
  EXPECT_LT(*chi({9, 1.0, -1e12, 0.0}), 1e-24);
  EXPECT_FALSE(chi({9, 1.0, 0.0, 0.0}).has_value());
}

TEST(Chi, Inversion) {
  EXPECT_NEAR(interaction_for_chi(3, 1.0, 1.0), -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(interaction_for_chi(6, 1.0, std::numeric_limits<double>::infinity()), 0.0);
  for (double c : {0.01, 0.5, 7.0}) {
    const double u = interaction_for_chi(7, 1.3, c);
    EXPECT_LT(u, 0.0);
    EXPECT_NEAR(*chi({7, 1.3, u, 0.0}), c, 1e-14 * c);
  }
  EXPECT_THROW(interaction_for_chi(3, 1.0, 0.0), DomainError);
  EXPECT_THROW(interaction_for_chi(3, 1.0, -1.0), DomainError);
}

TEST(CollapseBound, Formula) {
  EXPECT_DOUBLE_EQ(collapse_atom_bound(10.0, 1.0), 100.0);
  EXPECT_DOUBLE_EQ(collapse_atom_bound(1.0, 1.0), 1.0);
  EXPECT_NEAR(collapse_atom_bound(100.0, 0.1), 1e6, 1e-6);
  EXPECT_THROW(collapse_atom_bound(0.0, 1.0), DomainError);
  EXPECT_THROW(collapse_atom_bound(1.0, -1.0), DomainError);
}

TEST(GapScan, OracleAndOrdering) {
  const std::vector<int> ns{3, 6, 9, 12, 15};
  const std::vector<double> chis{1.0};
  const auto rows = gap_scan(ns, chis, 1.0);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(rows[0].interaction, -1.0 / std::sqrt(3.0), 1e-15);
  const auto o = dense({3, 1.0, rows[0].interaction, 0.0});
  EXPECT_NEAR(rows[0].gap, o.values[1] - o.values[0], 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].atoms, ns[i]);
    EXPECT_LT(rows[i].gap, rows[i - 1].gap);
  }
}

TEST(GapScan, InfiniteChiAndUnderflowFlag) {
  const std::vector<int> ns{6};
  const std::vector<double> chis{1e-2, std::numeric_limits<double>::infinity()};
  const auto rows = gap_scan(ns, chis, 1.0);
  EXPECT_EQ(rows[1].interaction, 0.0);
  EXPECT_NEAR(rows[1].gap, 2.0, 1e-12);
  EXPECT_FALSE(rows[1].underflow);
  for (const auto& r : rows) EXPECT_EQ(r.underflow, r.gap < kGapUnderflow * std::abs(r.e0));
}

TEST(GapScan, DefaultGridShape) {
  const std::vector<int> ns{3, 6, 9, 12, 15};
  const auto chis = log_grid(-2.0, 2.0, 41);
  EXPECT_DOUBLE_EQ(chis.front(), 0.01);
  EXPECT_DOUBLE_EQ(chis.back(), 100.0);
  const auto rows = gap_scan(ns, chis, 1.0);
  ASSERT_EQ(rows.size(), 5u * 41u);
  for (std::size_t c = 0; c < chis.size(); ++c)
    for (std::size_t k = 1; k < ns.size(); ++k) {
      const auto& a = rows[(k - 1) * chis.size() + c];
      const auto& b = rows[k * chis.size() + c];
      if (a.underflow || b.underflow) continue;
      EXPECT_LT(b.gap, a.gap) << "chi=" << chis[c] << " N=" << b.atoms;
    }
  for (std::size_t k = 0; k < ns.size(); ++k)
    for (std::size_t c = 1; c < chis.size(); ++c) {
      const auto& a = rows[k * chis.size() + c - 1];
      const auto& b = rows[k * chis.size() + c];
      if (a.underflow || b.underflow) continue;
      EXPECT_GT(b.gap, a.gap);
    }
}

TEST(GapScan, DeterministicAcrossRuns) {
  const std::vector<int> ns{3, 9, 15, 4};
  const auto chis = log_grid(-1.0, 1.0, 9);
  const auto a = gap_scan(ns, chis, 0.8), b = gap_scan(ns, chis, 0.8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].atoms, b[i].atoms);
    EXPECT_EQ(a[i].gap, b[i].gap);
    EXPECT_EQ(a[i].e0, b[i].e0);
  }
}

}  // namespace
}  // namespace dwcat
