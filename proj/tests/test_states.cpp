#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polco/errors.hpp"
#include "polco/io.hpp"
#include "polco/measures.hpp"
#include "polco/states.hpp"
#include "polco/su_basis.hpp"

using namespace polco;

TEST_CASE("beam_to_state") {
  const auto e00 = beam_to_state({1.0, 0.0, 0.0, 0.0});
  CHECK(e00 == StateVector({1.0, 0.0, 0.0, 0.0}, Split{2, 2}));

  const auto bell = beam_to_state({1.0, 0.0, 0.0, 1.0});
  CHECK(concurrence_2x2(bell) == doctest::Approx(1.0).epsilon(1e-15));

  const auto flat = beam_to_state({1.0, 1.0, 1.0, 1.0});
  CHECK(concurrence_2x2(flat) <= 1e-15);

  CHECK_THROWS_AS(beam_to_state({0.0, 0.0, 0.0, 0.0}), DegenerateInput);
}

TEST_CASE("beam polarization-coherence matrix built from slices") {
  // Phi_ij = <phi_j|phi_i> with phi_0 = <0_p|E>, phi_1 = <1_p|E>.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto c = oracle::random_vector(4, rng);
    const auto e = beam_to_state({c[0], c[1], c[2], c[3]});
    const CVector p0{e[0], e[1]};
    const CVector p1{e[2], e[3]};
    ComplexMatrix phi(2);
    phi(0, 0) = inner(p0, p0);
    phi(0, 1) = inner(p1, p0);
    phi(1, 0) = inner(p0, p1);
    phi(1, 1) = inner(p1, p1);
    CHECK(max_abs_diff(partial_trace(e.density(), 2, 2, Subsystem::A), phi) <= 1e-12);
    // det(Phi) = |ad - bc|^2
    CHECK(std::abs((phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0)) - 0.25 * std::pow(concurrence_2x2(e), 2)) <= 1e-12);
  }
}

TEST_CASE("separable iff slices are parallel") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto v = oracle::random_vector(2, rng);
    const auto k = oracle::random_vector(1, rng)[0];
    // phi_1 = k phi_0: separable.
    const auto sep = beam_to_state({v[0], v[1], k * v[0], k * v[1]});
    CHECK(concurrence_2x2(sep) <= 1e-12);
    // Perturb off the parallel line: entangled.
    const auto ent = beam_to_state({v[0], v[1], k * v[0] + 0.5, k * v[1]});
    CHECK(concurrence_2x2(ent) > 1e-6);
    CHECK(wedge_norm_sq(CVector{ent[0], ent[1]}, CVector{ent[2], ent[3]}) > 1e-12);
  }
}

TEST_CASE("named states") {
  const double t = 1.0 / std::sqrt(3.0);
  CHECK(named_state(NamedState::qutrit_max_entangled) ==
        StateVector({t, 0.0, 0.0, 0.0, t, 0.0, 0.0, 0.0, t}, Split{3, 3}));
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(named_state(NamedState::bell_phi_plus) == StateVector({h, 0.0, 0.0, h}, Split{2, 2}));
  const auto uniform = named_state(NamedState::qutrit_uniform_pure);
  CHECK(uniform.dim() == 3);
  CHECK(predictability_sq(uniform.density()) <= 1e-15);

  for (auto id : all_named_states()) CHECK(parse_named_state(to_string(id)) == id);
  CHECK_THROWS_AS(parse_named_state("cat_state"), UnknownState);
}

TEST_CASE("haar_pure") {
  const auto a = haar_pure(4, 99);
  CHECK(std::abs(norm_sq(a.amplitudes()) - 1.0) <= 1e-12);
  CHECK(a == haar_pure(4, 99));
  CHECK_FALSE(a == haar_pure(4, 100));
  CHECK(io::to_json(haar_pure(9, 5, Split{3, 3})).dump() == io::to_json(haar_pure(9, 5, Split{3, 3})).dump());

  SUBCASE("mean of S_3 is centred") {
    // S_3 of a Haar qubit is uniform on [-1, 1]: variance 1/3.
    constexpr int n = 10000;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += stokes_extract(haar_pure(2, derive_seed(2024, k)).density()).components[2];
    const double sigma = std::sqrt(1.0 / 3.0 / n);
    CHECK(std::abs(sum / n) < 3.0 * sigma);
  }
  SUBCASE("second moments are unitarily invariant") {
    // E[|psi><psi|] = I/d for a Haar ensemble; a fixed unitary leaves it there.
    std::mt19937_64 rng(31);
    const auto u = oracle::random_unitary(3, rng);
    constexpr int n = 20000;
    Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(3, 3);
    Eigen::MatrixXcd rotated = Eigen::MatrixXcd::Zero(3, 3);
    for (int k = 0; k < n; ++k) {
      const auto rho = oracle::to_eigen(haar_pure(3, derive_seed(77, k)).density());
      mean += rho / double(n);
      rotated += u * rho * u.adjoint() / double(n);
    }
    // Entries have standard deviation below 0.5 / sqrt(n).
    const double bound = 5.0 * 0.5 / std::sqrt(double(n));
    CHECK((mean - Eigen::MatrixXcd::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < bound);
    CHECK((rotated - Eigen::MatrixXcd::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < bound);
  }
}

TEST_CASE("random_mixed") {
  CHECK(linear_entropy_sq(random_mixed(3, 1, 8)) <= 1e-10);
  CHECK(max_abs_diff(random_mixed(3, 3, 8, true), ComplexMatrix::identity(3) * Complex(1.0 / 3.0)) <= 1e-12);
  CHECK_THROWS_AS(random_mixed(3, 4, 1), DimensionError);
  CHECK_THROWS_AS(random_mixed(3, 0, 1), DimensionError);
  CHECK(random_mixed(3, 2, 5) == random_mixed(3, 2, 5));

  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int rank = 1 + static_cast<int>(seed % 3);
    const auto rho = random_mixed(3, rank, seed);
    const auto report = validate_density(rho, true);
    CHECK(report.ok());
    CHECK(report.min_eigenvalue >= -1e-10);
    const auto ev = hermitian_eigenvalues(rho);
    int numerical_rank = 0;
    for (double x : ev) numerical_rank += x > 1e-10 ? 1 : 0;
    CHECK(numerical_rank == rank);
  }
}

TEST_CASE("derived seeds are distinct and stable") {
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}
