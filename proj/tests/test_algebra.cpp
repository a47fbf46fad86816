#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qlimit/algebra.hpp"

using namespace qlimit;

namespace {

using LMatrix = BasicMatrix<long double>;

// Spin-1 generators written out by hand in the (m = −1, 0, 1) basis.
Matrix spin_one_lplus() {
  Matrix m = Matrix::Zero(3, 3);
  m(1, 0) = m(2, 1) = std::sqrt(2.0);
  return m;
}

}  // namespace

TEST(Su2Generators, SpinHalf) {
  const auto rep = su2_generators(1);
  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 0) = 1.0;
  EXPECT_EQ(max_abs(rep.lplus() - expected), 0.0);
  EXPECT_EQ(rep.l3()(0, 0), Complex(-0.5));
  EXPECT_EQ(rep.l3()(1, 1), Complex(0.5));
}

TEST(Su2Generators, SpinOneByHand) {
  const auto rep = su2_generators(2);
  EXPECT_LT(max_abs(rep.lplus() - spin_one_lplus()), 1e-15);
  EXPECT_LT(max_abs(rep.lminus() - spin_one_lplus().adjoint()), 1e-15);
}

TEST(Su2Generators, HighestWeightAnnihilated) {
  for (std::int64_t two_l = 0; two_l <= 20; ++two_l) {
    const auto rep = su2_generators(two_l);
    EXPECT_EQ(max_abs(rep.lplus().col(two_l)), 0.0);
    EXPECT_EQ(max_abs(rep.lminus().col(0)), 0.0);
  }
}

TEST(Su2Generators, StructureInvariants) {
  const auto rep = su2_generators(9);
  const auto d = rep.dim();
  EXPECT_EQ(d, 10);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      if (r != c) EXPECT_EQ(rep.l3()(r, c), Complex(0.0));
      if (r != c + 1) EXPECT_EQ(rep.lplus()(r, c), Complex(0.0));
    }
  EXPECT_EQ(max_abs(rep.lminus() - rep.lplus().adjoint()), 0.0);
}

TEST(Su2Generators, CommutatorsDoublePrecisionSmall) {
  const auto rep = su2_generators(6);
  EXPECT_LT(max_abs(commutator(rep.l3(), rep.lplus()) - rep.lplus()), 1e-13);
  const auto rep4 = su2_generators(4);
  EXPECT_LT(max_abs(commutator(rep4.lplus(), rep4.lminus()) - 2.0 * rep4.l3()), 1e-13);
}

TEST(Su2Generators, IdentitiesUpTo200) {
  for (std::int64_t two_l = 0; two_l <= 200; ++two_l) {
    const auto r = algebra_residuals(su2_generators<long double>(two_l));
    ASSERT_LT(r.raise, 1e-13) << two_l;
    ASSERT_LT(r.lower, 1e-13) << two_l;
    ASSERT_LT(r.closure, 1e-13) << two_l;
    ASSERT_EQ(r.boundary, 0.0);
    ASSERT_EQ(exact_closure_failures(su2_generators(two_l)), 0);
  }
}

TEST(Su2Generators, DoublePrecisionRelativeResidual) {
  for (std::int64_t two_l = 1; two_l <= 200; two_l += 7) {
    const auto r = algebra_residuals(su2_generators(two_l));
    const double casimir = 0.25 * static_cast<double>(two_l * (two_l + 2));
    EXPECT_LT(std::max({r.raise, r.lower, r.closure}) / casimir, 1e-14) << two_l;
  }
}

TEST(Su2Generators, CasimirIsScalar) {
  for (std::int64_t two_l : {1, 2, 5, 12}) {
    const auto rep = su2_generators<long double>(two_l);
    const LMatrix c = rep.l3() * rep.l3() + (rep.lplus() * rep.lminus() + rep.lminus() * rep.lplus()) / 2.0L;
    const long double l = static_cast<long double>(two_l) / 2.0L;
    EXPECT_LT(max_abs(LMatrix(c - l * (l + 1) * LMatrix::Identity(rep.dim(), rep.dim()))), 1e-15);
  }
}

TEST(Su2Generators, RejectsNegative) { EXPECT_THROW(su2_generators(-1), std::domain_error); }

TEST(Su11Generators, SquareRootFreeAtHalf) {
  const auto rep = su11_generators(1, 40);
  for (Eigen::Index n = 0; n + 1 < 40; ++n) {
    EXPECT_EQ(rep.lplus()(n + 1, n), Complex(static_cast<double>(n + 1)));
    EXPECT_EQ(rep.lminus()(n, n + 1), Complex(static_cast<double>(n + 1)));
  }
  for (Eigen::Index n = 0; n < 40; ++n) EXPECT_EQ(rep.l3()(n, n), Complex(n + 0.5));
}

TEST(Su11Generators, LowestWeightAnnihilated) {
  for (std::int64_t two_k = 1; two_k <= 8; ++two_k) EXPECT_EQ(max_abs(su11_generators(two_k, 10).lminus().col(0)), 0.0);
}

TEST(Su11Generators, MatrixElements) {
  for (std::int64_t two_k = 1; two_k <= 8; ++two_k) {
    const auto rep = su11_generators(two_k, 16);
    const double k = 0.5 * static_cast<double>(two_k);
    for (Eigen::Index n = 0; n + 1 < 16; ++n)
      EXPECT_NEAR(rep.lplus()(n + 1, n).real(), std::sqrt((n + 2 * k) * (n + 1)), 1e-13);
  }
}

TEST(Su11Generators, IdentitiesOnInteriorRows) {
  for (std::int64_t dim : {2, 16, 64, 256})
    for (std::int64_t two_k = 1; two_k <= 8; ++two_k) {
      const auto rep = su11_generators<long double>(two_k, dim);
      const auto r = algebra_residuals(rep);
      const double tol = 1e-11 * static_cast<double>(dim);
      EXPECT_LT(r.raise, tol);
      EXPECT_LT(r.lower, tol);
      EXPECT_LT(r.closure, tol) << "2k=" << two_k << " D=" << dim;
      EXPECT_GT(r.boundary, 1.0);  // the truncation edge genuinely fails
      EXPECT_EQ(exact_closure_failures(rep), 0);
    }
}

TEST(Su11Generators, ThreeHalvesD32) {
  const auto rep = su11_generators(3, 32);
  const Matrix c = commutator(rep.lplus(), rep.lminus()) + 2.0 * rep.l3();
  EXPECT_LT(max_abs_rows(c, 31), 1e-12);
}

TEST(Su11Generators, RejectsBadArguments) {
  EXPECT_THROW(su11_generators(0, 4), std::domain_error);
  EXPECT_THROW(su11_generators(1, 1), std::domain_error);
}

TEST(AlgebraRep, PerturbationIsDetected) {
  auto rep = su2_generators<long double>(6);
  rep.perturb_lplus(1, 0, 1e-3);
  EXPECT_GT(algebra_residuals(rep).closure, 1e-4);
  auto cast = rep.cast<double>();
  EXPECT_GT(algebra_residuals(cast).closure, 1e-4);
}

TEST(InvariantC, ZeroForJZero) {
  const auto rep = su11_generators(1, 12);
  EXPECT_EQ(max_abs(invariant_C(rep, 0)), 0.0);
}

TEST(InvariantC, CommutesWithGenerators) {
  for (std::int64_t two_j : {-3, -1, 2, 5}) {
    const auto rep = su11_generators(std::abs(two_j) + 1, 20);
    const Matrix c = invariant_C(rep, two_j);
    EXPECT_EQ(max_abs(commutator(c, rep.lplus())), 0.0);
    EXPECT_EQ(max_abs(commutator(c, rep.lminus())), 0.0);
    EXPECT_EQ(max_abs(commutator(c, rep.l3())), 0.0);
    EXPECT_EQ(c(3, 3), Complex(0.5 * static_cast<double>(two_j)));
  }
}

TEST(InvariantC, Preconditions) {
  EXPECT_THROW(invariant_C(su2_generators(4), 0), std::domain_error);
  EXPECT_THROW(invariant_C(su11_generators(3, 8), 0), std::domain_error);
}

TEST(SeriesLabel, RoundTrip) {
  for (std::int64_t two_j = -16; two_j <= 16; ++two_j)
    for (std::int64_t two_m = std::abs(two_j); two_m <= 128; two_m += 2) {
      const TwiceJM jm{two_j, two_m};
      const auto s = series_label(jm);
      EXPECT_EQ(s.two_k, std::abs(two_j) + 1);
      EXPECT_EQ(2 * s.n, two_m - std::abs(two_j));
      EXPECT_EQ(jm_from_series(s, two_j < 0), jm);
    }
  EXPECT_THROW(series_label({3, 1}), std::domain_error);
  EXPECT_THROW(series_label({1, 2}), std::domain_error);
}

TEST(Contraction, Elements) {
  for (std::int64_t two_l : {2, 10, 1000}) {
    const auto pair = su2_contract(two_l);
    EXPECT_EQ(pair.source, LadderSource::contraction);
    const auto rep = su2_generators(two_l);
    const double s = std::sqrt(static_cast<double>(two_l));
    EXPECT_LT(max_abs(pair.a_dagger - rep.lplus() / s), 1e-13);
    EXPECT_LT(max_abs(pair.a - rep.lminus() / s), 1e-13);
    EXPECT_EQ(max_abs(pair.a_dagger - pair.a.adjoint()), 0.0);
    EXPECT_EQ(pair.a_dagger(1, 0), Complex(1.0));
  }
  EXPECT_THROW(su2_contract(1), std::domain_error);
}

TEST(Contraction, ExactAtVacuum) {
  for (std::int64_t two_l : {2, 3, 100, 2'000'000}) {
    EXPECT_EQ(su2_contract_element(two_l, 0), 1.0);
    EXPECT_EQ(contraction_error(two_l, 0), 0.0);
  }
}

TEST(Contraction, FrozenValues) {
  // Computed at 50 significant digits.
  EXPECT_NEAR(contraction_error(2'000'000, 8), 6.00000600001200003e-6, 1e-15);
  EXPECT_NEAR(contraction_error(20'000, 8), 6.0006001200300084025e-4, 1e-15);
  EXPECT_NEAR(contraction_error(200'000, 1), 3.5355383253611686159e-6, 1e-15);
  EXPECT_NEAR(contraction_error(20'000, 1) / contraction_error(40'000, 1), 2.0000125003906386724, 1e-6);
}

TEST(Contraction, ClosedFormAndMonotone) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    double previous = INFINITY;
    for (std::int64_t l = 10; l <= 1'000'000; l *= 10) {
      const double e = contraction_error(2 * l, n);
      const double x = static_cast<double>(n) / static_cast<double>(2 * l);
      EXPECT_NEAR(e, std::sqrt(n + 1.0) * std::abs(std::sqrt(1.0 - x) - 1.0), 1e-12);
      EXPECT_LT(e, previous);
      previous = e;
    }
  }
}

TEST(HolsteinPrimakoff, RecoversOscillatorAtHalf) {
  const std::int64_t dim = 64;
  const auto hp = holstein_primakoff(su11_generators(1, dim));
  EXPECT_EQ(hp.source, LadderSource::holstein_primakoff);
  for (Eigen::Index n = 0; n + 1 < dim; ++n) {
    EXPECT_NEAR(hp.a_dagger(n + 1, n).real(), std::sqrt(n + 1.0), 1e-13);
    EXPECT_NEAR(hp.a(n, n + 1).real(), std::sqrt(n + 1.0), 1e-13);
  }
  EXPECT_EQ(max_abs(hp.a.col(0)), 0.0);
  const Matrix c = commutator(hp.a, hp.a_dagger) - Matrix::Identity(dim, dim);
  EXPECT_LT(max_abs_rows(c, dim - 1), 1e-12);
  EXPECT_LT(max_abs(hp.a_dagger - hp.a.adjoint()), 1e-14);
}

TEST(HolsteinPrimakoff, NonnegativeElementsForAllK) {
  for (std::int64_t two_k = 1; two_k <= 8; ++two_k) {
    const auto hp = holstein_primakoff(su11_generators(two_k, 20));
    for (Eigen::Index n = 0; n + 1 < 20; ++n) {
      EXPECT_GE(hp.a_dagger(n + 1, n).real(), 0.0);
      EXPECT_EQ(hp.a_dagger(n + 1, n).imag(), 0.0);
    }
  }
}

TEST(HolsteinPrimakoff, Preconditions) {
  EXPECT_THROW(holstein_primakoff(su2_generators(4)), std::domain_error);
  const AlgebraRep<double> bad(AlgebraKind::su11_discrete, 1, {{1, 1}}, {Rational(-1), Rational(0)});
  EXPECT_THROW(holstein_primakoff(bad), std::domain_error);
}

TEST(PositionOperators, IntegerDiagonalSpectrum) {
  const std::int64_t n = 4;
  const auto p = position_operators(n);
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t l = 1; l <= n; ++l) {
      const auto idx = pair_index(n, {k, l});
      EXPECT_EQ(p.n_a(idx, idx), Complex(static_cast<double>(k)));
      EXPECT_EQ(p.n_b(idx, idx), Complex(static_cast<double>(l)));
    }
  EXPECT_EQ(max_abs(Matrix(p.n_a - Matrix(p.n_a.diagonal().asDiagonal()))), 0.0);
}

TEST(LadderFromPositions, ShiftIdentityN7) {
  const std::int64_t n = 7;
  const Matrix s = position_shift_operator(n);
  for (std::int64_t two_j : {0, 1, 2}) {
    const auto sector = jm_sector(n, two_j);
    for (std::size_t i = 1; i < sector.size(); ++i)
      EXPECT_LT(max_abs(s * jm_state(n, sector[i - 1]) - jm_state(n, sector[i])), 1e-12);
    EXPECT_LT(ladder_from_positions(n, two_j).shift_residual, 1e-12);
  }
}

TEST(LadderFromPositions, MatchesSu11OnInterior) {
  for (std::int64_t n : {3, 7, 11})
    for (std::int64_t two_j = -(n - 2); two_j <= n - 2; ++two_j) {
      const auto ladder = ladder_from_positions(n, two_j);
      const auto m = static_cast<Eigen::Index>(ladder.sector.size());
      const auto rep = su11_generators(std::abs(two_j) + 1, m);
      const Eigen::Index inner = m - 1;
      EXPECT_LT(max_abs(Matrix(ladder.lplus.topLeftCorner(inner, inner) - rep.lplus().topLeftCorner(inner, inner))),
                1e-11);
      EXPECT_LT(max_abs(Matrix(ladder.lminus.topLeftCorner(inner, inner) - rep.lminus().topLeftCorner(inner, inner))),
                1e-11);
      EXPECT_LT(max_abs(Matrix(ladder.lminus_alt.topLeftCorner(inner, inner) - ladder.lminus.topLeftCorner(inner, inner))),
                1e-12);
      EXPECT_EQ(max_abs(ladder.l3 - rep.l3()), 0.0);
      EXPECT_EQ(max_abs(ladder.casimir - invariant_C(rep, two_j)), 0.0);
    }
}

TEST(LadderFromPositions, LowerAfterRaise) {
  const std::int64_t n = 9;
  for (std::int64_t two_j : {-2, 0, 1, 4}) {
    const auto ladder = ladder_from_positions(n, two_j);
    const Matrix prod = ladder.lminus * ladder.lplus;
    for (std::size_t i = 0; i + 1 < ladder.sector.size(); ++i) {
      const double m = ladder.sector[i].m(), j = ladder.sector[i].j();
      const auto idx = static_cast<Eigen::Index>(i);
      EXPECT_NEAR(prod(idx, idx).real(), (m + 1) * (m + 1) - j * j, 1e-11);
    }
  }
}

TEST(LadderFromPositions, BoundaryWrapOnlyAtJZero) {
  const std::int64_t n = 7;
  for (std::int64_t two_j = -(n - 1); two_j <= n - 1; ++two_j) {
    const auto ladder = ladder_from_positions(n, two_j);
    const double wrap = max_abs(ladder.lplus.col(ladder.boundary_index()));
    if (two_j == 0)
      EXPECT_NEAR(wrap, static_cast<double>(n), 1e-12);
    else
      EXPECT_LT(wrap, 1e-12);
  }
}

TEST(LadderFromPositions, FiniteNOffset) {
  for (std::int64_t n : {2, 5, 100})
    EXPECT_NEAR(ladder_from_positions(n, 0).finite_n_l3_offset, 1.0 / (2.0 * static_cast<double>(n - 1)), 1e-15);
  EXPECT_THROW(ladder_from_positions(1, 0), std::domain_error);
  EXPECT_THROW(ladder_from_positions(5, 5), std::domain_error);
}
