#include <gtest/gtest.h>

#include <cmath>

#include "dwcat/eigen.hpp"
#include "dwcat/spinalg.hpp"
#include "support.hpp"

namespace dwcat {
namespace {

using test::kPi;
using test::max_abs_diff;

Complex ipow(int k) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

TEST(Basis, RejectsFewerThanTwoAtoms) {
  EXPECT_THROW(TwoModeBasis(1), DomainError);
  EXPECT_THROW(TwoModeBasis(0), DomainError);
  EXPECT_THROW(build_spin_operators(1), DomainError);
  EXPECT_THROW(cat_state(-3, 0.0), DomainError);
  EXPECT_EQ(TwoModeBasis(7).dim(), 8u);
  EXPECT_DOUBLE_EQ(TwoModeBasis(7).m_z(7), 3.5);
}

TEST(SpinOperators, TwoAtomMatrixElements) {
  const auto s = build_spin_operators(2);
  ASSERT_EQ(s.sx.offdiag.size(), 2u);
  EXPECT_NEAR(s.sx.offdiag[0], std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(s.sx.offdiag[1], std::sqrt(2.0) / 2, 1e-15);
  EXPECT_EQ(s.sz, (std::vector<double>{-1.0, 0.0, 1.0}));
  for (double d : s.sx.diag) EXPECT_EQ(d, 0.0);
}

TEST(SpinOperators, TwoAtomCommutatorIsExact) {
  const auto s = build_spin_operators(2);
  const auto c = commutator(s.dense_sx(), s.dense_sy()) - s.dense_sz() * Complex(0, 1);
  EXPECT_LE(c.max_abs(), 1e-15);
}

TEST(SpinOperators, LoweringOperatorIsNonNegative) {
  // S- = Sx - i Sy maps index i to a non-negative multiple of index i-1
  for (int n = 2; n <= 12; ++n) {
    const auto s = build_spin_operators(n);
    const auto lower = s.dense_sx() - s.dense_sy() * Complex(0, 1);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
      const Complex e = lower(i - 1, i);
      EXPECT_NEAR(e.imag(), 0.0, 1e-15);
      EXPECT_GT(e.real(), 0.0);
      for (std::size_t r = 0; r <= static_cast<std::size_t>(n); ++r)
        if (r != i - 1) EXPECT_EQ(std::abs(lower(r, i)), 0.0);
    }
  }
}

TEST(SpinOperators, AlgebraHoldsUpToTwenty) {
  for (int n = 2; n <= 20; ++n) {
    const auto s = build_spin_operators(n);
    const auto x = s.dense_sx(), y = s.dense_sy(), z = s.dense_sz();
    const Complex i(0, 1);
    EXPECT_LE((commutator(x, y) - z * i).max_abs(), 1e-12) << n;
    EXPECT_LE((commutator(y, z) - x * i).max_abs(), 1e-12) << n;
    EXPECT_LE((commutator(z, x) - y * i).max_abs(), 1e-12) << n;
    const double ss = 0.5 * n * (0.5 * n + 1.0);
    const auto cas = x * x + y * y + z * z - ComplexMatrix::identity(n + 1) * Complex(ss);
    EXPECT_LE(cas.max_abs(), 1e-12) << n;
  }
}

TEST(SpinOperators, NineAtomCasimir) {
  const auto s = build_spin_operators(9);
  const auto x = s.dense_sx(), y = s.dense_sy(), z = s.dense_sz();
  const auto c = x * x + y * y + z * z;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t col = 0; col < 10; ++col)
      EXPECT_NEAR(std::abs(c(r, col) - (r == col ? 4.5 * 5.5 : 0.0)), 0.0, 1e-12);
}

TEST(SpinOperators, MatrixFreeMatchesDense) {
  std::mt19937_64 rng(7);
  for (int n : {2, 5, 11}) {
    const auto s = build_spin_operators(n);
    const auto psi = test::random_state(n, rng);
    EXPECT_LE(max_abs_diff(s.apply_sx(psi.amplitudes()), s.dense_sx() * psi.amplitudes()), 1e-14);
    EXPECT_LE(max_abs_diff(s.apply_sy(psi.amplitudes()), s.dense_sy() * psi.amplitudes()), 1e-14);
    EXPECT_LE(max_abs_diff(s.apply_sz(psi.amplitudes()), s.dense_sz() * psi.amplitudes()), 1e-14);
  }
}

TEST(CatState, SymmetricAndAntisymmetric) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto s = cat_state(3, 0.0);
  const std::vector<Complex> want_s{h, 0, 0, h};
  EXPECT_LE(max_abs_diff(s.amplitudes(), want_s), 1e-15);
  const auto a = cat_state(3, kPi);
  const std::vector<Complex> want_a{-h, 0, 0, h};
  EXPECT_LE(max_abs_diff(a.amplitudes(), want_a), 1e-15);
  EXPECT_NEAR(cat_state(4, kPi / 2).norm(), 1.0, 1e-15);
}

TEST(SyEigenstates, EigenvaluesAndOrthogonality) {
  for (int n = 2; n <= 20; ++n) {
    const auto s = build_spin_operators(n);
    const auto [up, down] = sy_extreme_eigenstates(n);
    std::vector<Complex> want_up(up.amplitudes().begin(), up.amplitudes().end());
    std::vector<Complex> want_down(down.amplitudes().begin(), down.amplitudes().end());
    for (auto& a : want_up) a *= 0.5 * n;
    for (auto& a : want_down) a *= -0.5 * n;
    EXPECT_LE(max_abs_diff(s.apply_sy(up.amplitudes()), want_up), 1e-12) << n;
    EXPECT_LE(max_abs_diff(s.apply_sy(down.amplitudes()), want_down), 1e-12) << n;
    EXPECT_LE(std::abs(up.overlap(down)), 1e-14) << n;
  }
}

TEST(SyEigenstates, ClosedFormAmplitudes) {
  const int n = 6;
  const auto [up, down] = sy_extreme_eigenstates(n);
  for (int i = 0; i <= n; ++i) {
    const double mag = std::sqrt(std::tgamma(n + 1.0) /
                                 (std::tgamma(i + 1.0) * std::tgamma(n - i + 1.0)) / 64.0);
    EXPECT_LE(std::abs(up[i] - mag * ipow(-i)), 1e-15);
    EXPECT_LE(std::abs(down[i] - ipow(-n) * mag * ipow(i)), 1e-15);
  }
}

TEST(SyEigenstates, ParityFlip) {
  for (int n = 2; n <= 20; ++n) {
    const auto [up, down] = sy_extreme_eigenstates(n);
    const auto flipped = parity_operator(n).apply(down.amplitudes());
    std::vector<Complex> want(up.amplitudes().begin(), up.amplitudes().end());
    for (auto& a : want) a *= ipow(-n);
    EXPECT_LE(max_abs_diff(flipped, want), 1e-12) << n;
  }
}

TEST(Parity, DiagonalAndExpectation) {
  EXPECT_EQ(parity_operator(2).diagonal(), (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(parity_operator(3).expectation(StateVector::basis_state(TwoModeBasis(3), 3)), -1.0);
}

TEST(Parity, AnticommutesWithTransverseSpin) {
  for (int n = 2; n <= 20; ++n) {
    const auto s = build_spin_operators(n);
    const auto p = parity_operator(n).dense();
    const auto x = s.dense_sx(), y = s.dense_sy();
    EXPECT_LE((p * x + x * p).max_abs(), 1e-12);
    EXPECT_LE((p * y + y * p).max_abs(), 1e-12);
    EXPECT_LE((p * p - ComplexMatrix::identity(n + 1)).max_abs(), 0.0);
  }
}

TEST(Rotation, ZEigenstatesGoToYEigenstates) {
  for (int n = 2; n <= 14; ++n) {
    const auto s = build_spin_operators(n);
    const auto r = rotation_about_x(n, kPi / 2);
    for (int i = 0; i <= n; ++i) {
      const double m = i - 0.5 * n;
      const auto psi = apply_unitary(r, StateVector::basis_state(TwoModeBasis(n), i));
      auto resid = s.apply_sy(psi.amplitudes());
      for (std::size_t k = 0; k < resid.size(); ++k) resid[k] += m * psi[k];
      EXPECT_LE(euclidean_norm(resid), 1e-10) << n << " " << m;
    }
  }
}

TEST(Rotation, RotatedSzIdentity) {
  for (int n : {3, 8, 15}) {
    const auto s = build_spin_operators(n);
    const auto y = s.dense_sy(), z = s.dense_sz();
    for (double phi : {kPi / 6, kPi / 2, 1.0}) {
      const auto r = rotation_about_x(n, phi);
      const auto lhs = r * z * r.adjoint();
      const auto rhs = z * Complex(std::cos(phi)) - y * Complex(std::sin(phi));
      EXPECT_LE((lhs - rhs).max_abs(), 1e-10) << n << " " << phi;
    }
  }
}

TEST(MatrixElements, VanishingSxElements) {
  for (int n = 2; n <= 20; ++n) {
    const auto s = build_spin_operators(n);
    const auto [up, down] = sy_extreme_eigenstates(n);
    const auto sx_up = s.apply_sx(up.amplitudes());
    EXPECT_LE(std::abs(inner_product(up.amplitudes(), sx_up)), 1e-12) << n;
    EXPECT_LE(std::abs(inner_product(down.amplitudes(), sx_up)), 1e-12) << n;
  }
}

TEST(MatrixElements, SxParitySx) {
  for (int n = 3; n <= 20; ++n) {
    const auto s = build_spin_operators(n);
    const auto [up, down] = sy_extreme_eigenstates(n);
    const auto v = s.apply_sx(parity_operator(n).apply(s.apply_sx(up.amplitudes())));
    const Complex got = inner_product(down.amplitudes(), v);
    EXPECT_LE(std::abs(got + ipow(n) * (n / 4.0)), 1e-12) << n;
  }
}

}  // namespace
}  // namespace dwcat
