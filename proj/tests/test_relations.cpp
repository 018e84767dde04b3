#include <cmath>

#include "doctest.h"
#include "polco/errors.hpp"
#include "polco/measures.hpp"
#include "polco/relations.hpp"
#include "polco/states.hpp"

using namespace polco;

namespace {

constexpr double kFourThirds = 4.0 / 3.0;

}  // namespace

TEST_CASE("relation ids round-trip through their names") {
  for (auto id : all_relations()) CHECK(parse_relation(to_string(id)) == id);
  CHECK_THROWS_AS(parse_relation("bogus"), UnknownRelation);
}

TEST_CASE("check_duality_pure") {
  const auto q = check_duality_pure(StateVector({1.0, 0.0}));
  CHECK(q.pass);
  CHECK(q.lhs == doctest::Approx(1.0));
  CHECK(q.rhs == 1.0);

  const auto u = check_duality_pure(named_state(NamedState::qutrit_uniform_pure));
  CHECK(u.pass);
  CHECK(u.rhs == kFourThirds);
  CHECK(std::abs(u.lhs - kFourThirds) <= 1e-12);
  CHECK(u.residual == std::abs(u.lhs - u.rhs));

  CHECK_THROWS_AS(check_duality_pure(ComplexMatrix::identity(3) * Complex(1.0 / 3.0)), PreconditionError);
  CHECK(check_duality_pure(ComplexMatrix::diagonal({0.0, 1.0})).pass);
  CHECK_THROWS_AS(check_duality_pure(haar_pure(4, 1)), UnsupportedDimension);

  const auto s = run_campaign(RelationId::duality, 1000, 3, {.dim = 3});
  CHECK(s.failures == 0);
  CHECK(s.max_residual < 1e-10);
}

TEST_CASE("check_pct") {
  const auto mixed = check_pct(ComplexMatrix::identity(2) * Complex(0.5));
  CHECK(mixed.pass);
  CHECK(mixed.lhs == 0.0);

  const auto partial = check_pct(ComplexMatrix::diagonal({0.75, 0.25}));
  CHECK(partial.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(partial.rhs == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(check_pct(ComplexMatrix::identity(3) * Complex(1.0 / 3.0)), UnsupportedDimension);
  const auto s = run_campaign(RelationId::pct, 1000, 1);
  CHECK(s.failures == 0);
  CHECK(s.max_residual < 1e-10);
}

TEST_CASE("check_qubit_triality_pure") {
  const auto bell = check_qubit_triality_pure(named_state(NamedState::bell_phi_plus));
  CHECK(bell.pass);
  CHECK(bell.lhs == doctest::Approx(1.0));
  REQUIRE(bell.companions.size() == 2);

  const auto prod = check_qubit_triality_pure(named_state(NamedState::product_00));
  CHECK(prod.pass);

  CHECK_THROWS_AS(check_qubit_triality_pure(named_state(NamedState::qutrit_product_00)), DimensionError);

  const auto s = run_campaign(RelationId::qubit_triality, 10000, 42);
  CHECK(s.failures == 0);
  CHECK(s.max_residual < 1e-9);
}

TEST_CASE("check_qutrit_triality_pure") {
  const auto max = check_qutrit_triality_pure(named_state(NamedState::qutrit_max_entangled));
  CHECK(max.pass);
  CHECK(std::abs(max.lhs - kFourThirds) <= 1e-12);

  // Separable: the usual duality carries the whole 4/3.
  const auto sep = tensor(haar_pure(3, 5), haar_pure(3, 6));
  const auto v = check_qutrit_triality_pure(sep);
  CHECK(v.pass);
  CHECK(i_concurrence_sq(sep) <= 1e-12);

  const auto s = run_campaign(RelationId::qutrit_triality, 10000, 43);
  CHECK(s.failures == 0);
  CHECK(s.max_residual < 1e-9);
}

TEST_CASE("check_mixed_triality") {
  const auto mm = check_mixed_triality(ComplexMatrix::identity(3) * Complex(1.0 / 3.0));
  CHECK(mm.pass);
  CHECK(mm.lhs == doctest::Approx(kFourThirds));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = check_mixed_triality(haar_pure(2, seed).density());
    CHECK(p.pass);
    CHECK(p.rhs == 1.0);
  }
  CHECK_THROWS_AS(check_mixed_triality(ComplexMatrix::diagonal({1.2, -0.2})), ValidationError);

  for (int rank = 1; rank <= 3; ++rank) {
    const auto s = run_campaign(RelationId::mixed_triality, 1000, 11, {.dim = 3, .rank = rank});
    CHECK(s.failures == 0);
    CHECK(s.max_residual < 1e-9);
  }
}

TEST_CASE("check_pure_stokes_geometry") {
  const auto zero = check_pure_stokes_geometry(StateVector({1.0, 0.0, 0.0}));
  CHECK(zero.pass);
  CHECK(zero.residual < 1e-10);

  const auto mixed = check_pure_stokes_geometry(ComplexMatrix::identity(3) * Complex(1.0 / 3.0));
  CHECK_FALSE(mixed.pass);
  CHECK(std::abs(mixed.lhs - mixed.rhs) == doctest::Approx(1.0));

  const auto s = run_campaign(RelationId::stokes_geometry, 500, 2);
  CHECK(s.failures == 0);
  CHECK(s.max_residual < 1e-9);
}

TEST_CASE("mixed two-qubit parents: duality becomes an inequality") {
  const auto s = run_campaign(RelationId::mixed_parent_bound, 1000, 9);
  CHECK(s.failures == 0);
  // Rank > 1 parents leave strictly mixed marginals.
  const auto v = check_mixed_parent_bound(random_mixed(4, 4, 3));
  const auto rho = partial_trace(random_mixed(4, 4, 3), 2, 2, Subsystem::A);
  CHECK(v.lhs < 1.0);
  CHECK(std::abs(v.lhs - (predictability_sq(rho) + coherence_hs_sq(rho))) <= 1e-15);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("entanglement bounds the degree of polarization") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto psi = haar_pure(4, seed, Split{2, 2});
    const auto rho = partial_trace(psi.density(), 2, 2, Subsystem::A);
    CHECK(std::abs(degree_pol_sq(rho) - (1.0 - std::pow(concurrence_2x2(psi), 2))) <= 1e-9);
  }
}

TEST_CASE("maximal entanglement erases local information") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto psi = haar_pure(9, seed, Split{3, 3});
    if (i_concurrence_sq(psi) < kFourThirds - 1e-9) continue;
    const auto rho = partial_trace(psi.density(), 3, 3, Subsystem::A);
    CHECK(predictability_sq(rho) <= 1e-8);
    CHECK(coherence_hs_sq(rho) <= 1e-8);
  }
  const auto max = named_state(NamedState::qutrit_max_entangled);
  const auto rho = partial_trace(max.density(), 3, 3, Subsystem::A);
  CHECK(predictability_sq(rho) <= 1e-8);
  CHECK(coherence_hs_sq(rho) <= 1e-8);
}

TEST_CASE("subsystem symmetry of the trialities") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto q2 = haar_pure(4, seed, Split{2, 2});
    const auto a2 = check_qubit_triality_pure(q2, {.side = Subsystem::A});
    const auto b2 = check_qubit_triality_pure(q2, {.side = Subsystem::B});
    CHECK(a2.pass == b2.pass);
    CHECK(std::abs(a2.residual - b2.residual) <= 1e-10);

    const auto q3 = haar_pure(9, seed, Split{3, 3});
    const auto a3 = check_qutrit_triality_pure(q3, {.side = Subsystem::A});
    const auto b3 = check_qutrit_triality_pure(q3, {.side = Subsystem::B});
    CHECK(a3.pass == b3.pass);
    CHECK(std::abs(a3.residual - b3.residual) <= 1e-10);
  }
}

TEST_CASE("entanglement bridge") {
  for (int d : {2, 3}) {
    const auto s = run_campaign(RelationId::entanglement_bridge, 1000, 5, {.dim = d});
    CHECK(s.failures == 0);
    CHECK(s.max_residual < 1e-10);
  }
  const auto v = check_entanglement_bridge(named_state(NamedState::partial_entangled_08));
  REQUIRE(v.companions.size() == 1);
  CHECK(v.lhs == doctest::Approx(0.64));
}

TEST_CASE("run_campaign bookkeeping") {
  SUBCASE("single sample equals its verdict") {
    const auto s = run_campaign(RelationId::qutrit_triality, 1, 77);
    const auto v = evaluate_sample(RelationId::qutrit_triality, 77, 0, {});
    CHECK(s.n_samples == 1);
    CHECK(s.max_residual == v.residual);
    CHECK(s.mean_residual == v.residual);
    CHECK(s.failures == (v.pass ? 0 : 1));
  }
  SUBCASE("deterministic and independent of thread count") {
    const auto a = run_campaign(RelationId::qubit_triality, 2000, 5, {.threads = 1});
    const auto b = run_campaign(RelationId::qubit_triality, 2000, 5, {.threads = 4});
    const auto c = run_campaign(RelationId::qubit_triality, 2000, 5, {.threads = 1});
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.mean_residual == b.mean_residual);
    CHECK(a.max_residual == c.max_residual);
    CHECK(a.mean_residual == c.mean_residual);
  }
  SUBCASE("failures are counted, not thrown") {
    // An impossibly tight tolerance turns rounding noise into failures.
    const auto s = run_campaign(RelationId::qutrit_triality, 200, 1, {.tolerance = 1e-300});
    CHECK(s.failures > 0);
    CHECK(s.errors == 0);
    // Duality has no meaning in dimension 5: every sample errors out.
    const auto e = run_campaign(RelationId::duality, 10, 1, {.dim = 5});
    CHECK(e.errors == 10);
    CHECK(e.failures == 10);
  }
  CHECK_THROWS_AS(run_campaign(RelationId::pct, 0, 1), PreconditionError);
}

TEST_CASE("dispatch by input shape") {
  const auto bell = named_state(NamedState::bell_phi_plus);
  for (auto id : applicable_relations(bell)) CHECK(check(id, bell).pass);
  const auto max = named_state(NamedState::qutrit_max_entangled);
  for (auto id : applicable_relations(max)) CHECK(check(id, max).pass);
  CHECK_THROWS_AS(check(RelationId::stokes_geometry, bell), PreconditionError);

  const auto rho = random_mixed(3, 2, 4);
  const auto ids = applicable_relations(rho);
  CHECK(ids == std::vector<RelationId>{RelationId::mixed_triality});
  CHECK_THROWS_AS(check(RelationId::qubit_triality, rho), PreconditionError);
}
