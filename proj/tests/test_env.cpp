#include "doctest.h"

#include <cmath>

#include "hsk/env.hpp"

using namespace hsk;

TEST_CASE("field values are symmetric and reproducible") {
  EnvironmentSpec spec;
  spec.model = Model::Exponential;
  spec.alpha = 0.3;
  spec.theta = 0.5;
  Field f(spec, Stream(99));
  Field g(spec, Stream(99));
  for (long long i = -3; i <= 3; ++i)
    for (long long j = -3; j <= 3; ++j) {
      CHECK(f(i, j) == f(j, i));
      CHECK(f(i, j) == g(i, j));
      CHECK(f(i, j) >= 0.0);
    }
  Field h(spec, Stream(100));
  CHECK(f(1, 2) != h(1, 2));
}

TEST_CASE("parameter layout: boundary on the diagonal, pair sums off it") {
  EnvironmentSpec spec;
  spec.alpha = 0.8;
  spec.theta = 0.5;
  spec.gamma_exceptions[1] = -0.2;
  CHECK(spec.gamma(1) == -0.2);
  CHECK(spec.gamma(2) == 0.5);
  CHECK(spec.cell_param(1, 1) == doctest::Approx(0.6));   // alpha + gamma_1
  CHECK(spec.cell_param(2, 2) == doctest::Approx(1.3));   // alpha + theta
  CHECK(spec.cell_param(1, 2) == doctest::Approx(0.3));   // gamma_1 + theta
  CHECK(spec.cell_param(3, 4) == doctest::Approx(1.0));

  EnvironmentSpec geo;
  geo.model = Model::Geometric;
  geo.alpha = 0.9;
  geo.theta = 0.7;
  CHECK(geo.cell_param(2, 2) == doctest::Approx(0.63));   // alpha * theta
  CHECK(geo.cell_param(2, 5) == doctest::Approx(0.49));
}

TEST_CASE("one-parameter half-space shortcut gives diagonal rate alpha, bulk rate 1") {
  const auto e = EnvironmentSpec::homogeneous_halfspace(0.4);
  CHECK(e.cell_param(5, 5) == doctest::Approx(0.4));
  CHECK(e.cell_param(5, 2) == doctest::Approx(1.0));
  const auto e2 = EnvironmentSpec::homogeneous_halfspace(1.2);
  CHECK(e2.cell_param(1, 1) == doctest::Approx(1.2));
}

TEST_CASE("degenerate parameters map to sentinels, not exceptions") {
  EnvironmentSpec spec;
  spec.model = Model::Exponential;
  spec.alpha = 0.1;
  spec.theta = 0.5;
  spec.gamma_exceptions[1] = -0.5;  // gamma_1 + theta = 0: blown-up pair
  Field f(spec, Stream(1));
  CHECK(std::isinf(f(1, 2)));
  CHECK(f(1, 2) > 0);

  EnvironmentSpec geo;
  geo.model = Model::Geometric;
  geo.alpha = 2.0;
  geo.theta = 0.8;
  geo.gamma_exceptions[3] = 1.5;
  Field g(geo, Stream(2));
  CHECK(std::isinf(g(3, 3)));      // ratio alpha*gamma_3 = 3 >= 1
  CHECK(g(1, 2) >= 0.0);

  EnvironmentSpec lg;
  lg.model = Model::LogGamma;
  lg.alpha = 0.2;
  lg.theta = 0.5;
  lg.gamma_exceptions[1] = -0.3;
  Field h(lg, Stream(3));
  CHECK(std::isinf(h(1, 1)));      // shape alpha + gamma_1 <= 0
  CHECK(h(2, 3) > 0.0);
}

TEST_CASE("empirical law of sampled weights matches the parameter layout") {
  const auto spec = EnvironmentSpec::homogeneous_halfspace(0.4);
  Field f(spec, Stream(7));
  const int n = 50000;
  double diag = 0.0, bulk = 0.0;
  for (int k = 1; k <= n; ++k) {
    diag += f(k, k);
    bulk += f(k + 1, k);
  }
  CHECK(diag / n == doctest::Approx(2.5).epsilon(0.03));  // mean 1/alpha
  CHECK(bulk / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("materialized windows and cell overrides") {
  const auto spec = EnvironmentSpec::homogeneous_halfspace(1.0);
  Field f(spec, Stream(11));
  Window win = materialize(f, -1, 3, -1, 3);
  CHECK(win(2, 1) == f(2, 1));
  CHECK(win(2, 1) == win(1, 2));
  CHECK_THROWS_AS(win(4, 0), std::out_of_range);

  override_cells(win, {{0, 1, 9.0}, {2, 2, 4.0}});
  CHECK(win(0, 1) == 9.0);
  CHECK(win(1, 0) == 9.0);  // mirror kept in sync
  CHECK(win(2, 2) == 4.0);

  CHECK_THROWS_AS(override_cells(win, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  override_cells(win, {{0, 1, 5.0}, {1, 0, 5.0}});  // agreeing mirrors are fine
  CHECK(win(0, 1) == 5.0);

  Window asym(0, 1, 0, 1);
  override_cells(asym, {{0, 1, 1.0}, {1, 0, 2.0}}, /*symmetric=*/false);
  CHECK(asym(0, 1) == 1.0);
  CHECK(asym(1, 0) == 2.0);
}
