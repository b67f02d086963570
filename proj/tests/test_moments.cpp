#include "doctest.h"
#include "pdc/moments.hpp"

using namespace pdc;

TEST_CASE("thermal_state fills the diagonal and nothing else") {
  const GaussianMoments g = thermal_state(0.3, StatKind::Quantum);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(g.anomalous(i, j) == MomentScalar(0.0));
      // The API takes a double occupation, so the stored extended-precision
      // entry is exactly the promotion of the double literal.
      CHECK(g.normal(i, j) == MomentScalar(i == j ? 0.3 : 0.0));
    }
  }
  CHECK(g.stat == StatKind::Quantum);
}

TEST_CASE("thermal_state rejects bad occupations") {
  CHECK_THROWS_AS(thermal_state(-0.1, StatKind::Quantum), std::domain_error);
  CHECK_THROWS_AS(thermal_state(std::nan(""), StatKind::Classical),
                  std::domain_error);
}

TEST_CASE("validate accepts thermal states and the squeezed boundary") {
  CHECK(validate(thermal_state(0.0, StatKind::Quantum)).empty());
  CHECK(validate(thermal_state(2.5, StatKind::Classical)).empty());

  // Two-mode squeezed vacuum sits exactly on |M|^2 = n (n + 1).
  GaussianMoments g = thermal_state(0.0, StatKind::Quantum);
  const double n = 1.7;
  g.normal(0, 0) = n;
  g.normal(3, 3) = n;
  const double a = std::sqrt(n * (n + 1.0));
  g.anomalous(0, 3) = a;
  g.anomalous(3, 0) = a;
  CHECK(validate(g).empty());
}

TEST_CASE("validate reports each kind of violation with its indices") {
  GaussianMoments g = thermal_state(1.0, StatKind::Quantum);

  SUBCASE("broken Hermiticity") {
    g.normal(0, 1) = {0.2, 0.1};
    g.normal(1, 0) = {0.2, 0.1};  // should be the conjugate
    const auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == MomentViolation::Kind::NotHermitian);
    CHECK(v[0].i == 0);
    CHECK(v[0].j == 1);
  }

  SUBCASE("negative occupation") {
    g.normal(2, 2) = -0.5;
    const auto v = validate(g);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& viol : v) {
      if (viol.kind == MomentViolation::Kind::NegativeDiagonal) {
        found = true;
        CHECK(viol.i == 2);
      }
    }
    CHECK(found);
  }

  SUBCASE("asymmetric anomalous block") {
    g.anomalous(0, 3) = 0.4;
    g.anomalous(3, 0) = 0.3;
    const auto v = validate(g);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == MomentViolation::Kind::NotSymmetric);
  }

  SUBCASE("pair correlation above the quantum bound") {
    const double too_big = std::sqrt(1.0 * 2.0) + 1e-3;
    g.anomalous(0, 3) = too_big;
    g.anomalous(3, 0) = too_big;
    const auto v = validate(g);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& viol : v) {
      found = found || viol.kind == MomentViolation::Kind::PairBoundExceeded;
    }
    CHECK(found);
  }

  SUBCASE("classical statistics tightens the pair bound") {
    g.stat = StatKind::Classical;
    const double quantum_ok = std::sqrt(1.0 * 2.0) - 1e-3;  // > n0 = 1
    g.anomalous(0, 3) = quantum_ok;
    g.anomalous(3, 0) = quantum_ok;
    CHECK(!validate(g).empty());
    g.stat = StatKind::Quantum;
    CHECK(validate(g).empty());
  }

  SUBCASE("non-finite entries are caught first") {
    g.normal(1, 1) = std::nan("");
    const auto v = validate(g);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == MomentViolation::Kind::NonFinite);
  }
}

TEST_CASE("violation descriptions carry the offending indices") {
  GaussianMoments g = thermal_state(0.0, StatKind::Quantum);
  g.normal(3, 3) = -1.0;
  const auto v = validate(g);
  REQUIRE(!v.empty());
  const std::string d = v[0].describe();
  CHECK(d.find("(3, 3)") != std::string::npos);
}
