#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polco/errors.hpp"
#include "polco/states.hpp"
#include "polco/su_basis.hpp"

using namespace polco;

TEST_CASE("generator tables") {
  CHECK(generators(2)[3] == ComplexMatrix::diagonal({1.0, -1.0}));
  const double r3 = 1.0 / std::sqrt(3.0);
  CHECK(max_abs_diff(generators(3)[8], ComplexMatrix::diagonal({r3, r3, -2 * r3})) < 1e-16);
  CHECK(generators(2).size() == 3);
  CHECK(generators(3).size() == 8);
  CHECK_THROWS_AS(generators(4), UnsupportedDimension);

  // Match the independently typed Gell-Mann list.
  const auto ref = oracle::gell_mann();
  for (int k = 0; k < 8; ++k) CHECK(max_abs_diff(generators(3).generators[k], oracle::from_eigen(ref[k])) == 0.0);

  for (int n : {2, 3}) {
    const auto& g = generators(n).generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(max_abs_diff(g[i], g[i].adjoint()) <= 1e-12);
      CHECK(std::abs(g[i].trace()) <= 1e-12);
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double expected = i == j ? 2.0 : 0.0;
        CHECK(std::abs((g[i] * g[j]).trace() - Complex(expected)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("structure constants against commutator and anticommutator traces") {
  const auto& sc = structure_constants();
  const auto l = oracle::gell_mann();
  const Complex i(0, 1);
  double worst = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        const Complex f = ((l[a] * l[b] - l[b] * l[a]) * l[c]).trace() / (4.0 * i);
        const Complex d = ((l[a] * l[b] + l[b] * l[a]) * l[c]).trace() / 4.0;
        worst = std::max({worst, std::abs(f - sc.f(a, b, c)), std::abs(d - sc.d(a, b, c))});
      }
  CHECK(worst <= 1e-12);
  CHECK(sc.max_discarded_imag() <= 1e-12);

  CHECK(sc.f(0, 1, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sc.d(0, 0, 7) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  // Standard table values as a cross-check on the typed matrices.
  CHECK(sc.f(3, 4, 7) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(sc.f(0, 3, 6) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sc.d(7, 7, 7) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));

  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK(sc.f(a, a, b) == 0.0);
      CHECK(sc.f(a, b, a) == 0.0);
      CHECK(sc.f(b, a, a) == 0.0);
    }
}

TEST_CASE("structure constant symmetry on random triples") {
  const auto& sc = structure_constants();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> idx(0, 7);
  for (int t = 0; t < 200; ++t) {
    const int a = idx(rng), b = idx(rng), c = idx(rng);
    const std::array<std::array<int, 3>, 6> perms{{{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}}};
    for (int p = 0; p < 6; ++p) {
      const auto [x, y, z] = perms[p];
      const double sign = p < 3 ? 1.0 : -1.0;
      CHECK(std::abs(sc.d(x, y, z) - sc.d(a, b, c)) <= 1e-12);
      CHECK(std::abs(sc.f(x, y, z) - sign * sc.f(a, b, c)) <= 1e-12);
    }
  }
}

TEST_CASE("stokes_extract") {
  const auto s2 = stokes_extract(ComplexMatrix::identity(2) * Complex(0.5));
  CHECK(s2.n == 2);
  CHECK(s2.components == std::vector<double>{0.0, 0.0, 0.0});

  const auto up = stokes_extract(ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK(up.components == std::vector<double>{0.0, 0.0, 1.0});

  const auto s3 = stokes_extract(ComplexMatrix::identity(3) * Complex(1.0 / 3.0));
  CHECK(s3.components.size() == 8);
  for (double x : s3.components) CHECK(std::abs(x) <= 1e-15);

  // Unnormalized input is trace-normalized first.
  const auto scaled = stokes_extract(ComplexMatrix::diagonal({3.0, 1.0}));
  CHECK(scaled.components[2] == doctest::Approx(0.5));

  CHECK_THROWS_AS(stokes_extract(ComplexMatrix(2, {0.5, 0.2, 0.0, 0.5})), ValidationError);
  CHECK_THROWS_AS(stokes_extract(ComplexMatrix::identity(4)), UnsupportedDimension);
}

TEST_CASE("stokes_reconstruct") {
  CHECK(max_abs_diff(stokes_reconstruct({3, std::vector<double>(8, 0.0)}), ComplexMatrix::identity(3) * Complex(1.0 / 3.0)) < 1e-16);
  CHECK(stokes_reconstruct({2, {0.0, 0.0, 1.0}}) == ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK_THROWS_AS(stokes_reconstruct({3, {0.0, 0.0, 1.0}}), DimensionError);

  std::mt19937_64 rng(21);
  for (int n : {2, 3}) {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const auto m = oracle::random_hermitian_unit_trace(n, rng);
      const auto back = stokes_reconstruct(stokes_extract(m));
      worst = std::max(worst, max_abs_diff(back, m));
      CHECK(max_abs_diff(back, back.adjoint()) == 0.0);
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("qubit Stokes vectors stay inside the unit ball") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto rho = random_mixed(2, 1 + static_cast<int>(seed % 2), seed);
    CHECK(stokes_extract(rho).norm_sq() <= 1.0 + 1e-12);
  }
}

TEST_CASE("pure_state_constraints") {
  const auto proj = pure_state_constraints(stokes_extract(ComplexMatrix::diagonal({1.0, 0.0, 0.0})));
  CHECK(proj.norm_residual < 1e-10);
  CHECK(proj.dijk_residual < 1e-10);

  const auto mixed = pure_state_constraints(stokes_extract(ComplexMatrix::identity(3) * Complex(1.0 / 3.0)));
  CHECK(mixed.norm_residual == doctest::Approx(1.0).epsilon(1e-15));

  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto r = pure_state_constraints(stokes_extract(haar_pure(3, seed).density()));
    CHECK(r.norm_residual < 1e-9);
    CHECK(r.dijk_residual < 1e-9);
  }

  CHECK_THROWS_AS(pure_state_constraints({2, {0.0, 0.0, 1.0}}), DimensionError);
}
