#include "doctest.h"

#include <cmath>
#include <vector>

#include "hsk/rng.hpp"

using hsk::Stream;

TEST_CASE("streams are pure functions of their derivation path") {
  Stream a(42), b(42), c(43);
  CHECK(a.bits(7) == b.bits(7));
  CHECK(a.sub(1, 2, 3).bits() == b.sub(1, 2, 3).bits());
  CHECK(a.bits() != c.bits());
  CHECK(a.sub(1).bits() != a.sub(2).bits());
  CHECK(a.sub(1, 2).bits() != a.sub(2, 1).bits());
  CHECK(a.at(-3, 5).bits() != a.at(5, -3).bits());
  // draw index changes the output, not the stream
  CHECK(a.u01(0) != a.u01(1));
}

TEST_CASE("u01 stays strictly inside the unit interval") {
  Stream s(7);
  for (int n = 0; n < 10000; ++n) {
    const double u = s.u01(n);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("exponential moments and degenerate parameters") {
  Stream s(11);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = s.sub(k).exponential(2.0);
    sum += x;
    sumsq += x * x;
  }
  const double m = sum / n, v = sumsq / n - m * m;
  CHECK(m == doctest::Approx(0.5).epsilon(0.02));
  CHECK(v == doctest::Approx(0.25).epsilon(0.05));
  CHECK(s.exponential(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(std::isinf(s.exponential(0.0)));
  CHECK(std::isinf(s.exponential(-1.0)));
}

TEST_CASE("geometric pmf at zero and mean") {
  Stream s(5);
  const double theta = 0.6;
  const int n = 200000;
  int zeros = 0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const long long g = s.sub(k).geometric(theta);
    REQUIRE(g >= 0);
    zeros += g == 0;
    sum += static_cast<double>(g);
  }
  CHECK(static_cast<double>(zeros) / n == doctest::Approx(1.0 - theta).epsilon(0.02));
  CHECK(sum / n == doctest::Approx(theta / (1.0 - theta)).epsilon(0.03));
}

TEST_CASE("normal pair has the right first two moments") {
  Stream s(13);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int k = 0; k < n; ++k) {
    const double z = s.sub(k).normal();
    sum += z;
    sumsq += z * z;
  }
  CHECK(sum / n == doctest::Approx(0.0).epsilon(1).scale(0.02));
  CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("gamma and inverse-gamma sampling") {
  Stream s(17);
  const int n = 100000;
  for (double shape : {0.7, 1.0, 2.5}) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += s.sub(static_cast<std::uint64_t>(shape * 100), k).gamma(shape);
    CHECK(sum / n == doctest::Approx(shape).epsilon(0.03));
  }
  // inverse-gamma(shape) has mean 1/(shape-1) for shape > 1
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += s.sub(9, k).inverse_gamma(3.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.05));
  CHECK(std::isinf(s.inverse_gamma(0.0)));
}

TEST_CASE("adjacent cell streams look uncorrelated") {
  Stream s(23);
  const int n = 20000;
  double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = s.at(k, k).u01();
    const double y = s.at(k, k + 1).u01();
    sx += x; sy += y; sxy += x * y; sxx += x * x; syy += y * y;
  }
  const double n_ = n;
  const double r = (sxy - sx * sy / n_) /
                   std::sqrt((sxx - sx * sx / n_) * (syy - sy * sy / n_));
  CHECK(std::abs(r) < 0.03);
}
