#include <doctest.h>

#include <cmath>

#include "sumfree/distributions.hpp"

using namespace sumfree;

namespace {

Params params(int m, int k) {
  Params p;
  p.m = m;
  p.k = k;
  return p;
}

}  // namespace

TEST_CASE("capacity polynomial signs") {
  // m=3, k=3: poly(g) = -2 + g + 4g^2.
  CHECK(capacity_polynomial(3, 3, make_rat(1, 2)) == make_rat(-1, 2));
  CHECK(capacity_polynomial(3, 3, rat(1)) == rat(3));
  CHECK(capacity_polynomial(3, 3, rat(0)) == rat(-2));
}

TEST_CASE("gamma bracket collapses on exact roots") {
  // m=2, k=3: poly(g) = -1 + 2g, root exactly 1/2.
  const auto br = gamma_bracket(2, 3, 50);
  CHECK(br.first == make_rat(1, 2));
  CHECK(br.second == make_rat(1, 2));
}

TEST_CASE("gamma bracket encloses the closed-form root") {
  // m=3, k=3: -2 + g + 4g^2 = 0 has root (sqrt(33)-1)/8 in (0,1).
  const double root = (std::sqrt(33.0) - 1.0) / 8.0;
  const auto br = gamma_bracket(3, 3, 60);
  CHECK(to_double(br.first) <= root);
  CHECK(to_double(br.second) >= root);
  CHECK(to_double(rat(br.second - br.first)) <= std::ldexp(1.0, -60));
  CHECK(gamma_root(params(3, 3)) == doctest::Approx(root).epsilon(1e-12));
}

TEST_CASE("capacity closed forms") {
  const CapacityResult c23 = capacity(params(2, 3));
  CHECK(c23.gamma == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c23.capacity == doctest::Approx(1.5 * std::cbrt(2.0)).epsilon(1e-12));

  const CapacityResult c33 = capacity(params(3, 3));
  const double g = (std::sqrt(33.0) - 1.0) / 8.0;
  CHECK(c33.capacity == doctest::Approx((1.0 + g + g * g) / std::pow(g, 2.0 / 3.0)).epsilon(1e-9));
  CHECK(std::abs(c33.capacity - 2.7551) < 1e-3);
  CHECK(std::exp(c33.entropy_nu) == doctest::Approx(c33.capacity).epsilon(1e-9));
}

TEST_CASE("nu(2,3) is exactly (2/3, 1/3)") {
  const ScaledDistribution d = nu(params(2, 3));
  REQUIRE(d.support_max() == 1);
  CHECK(d[0] == make_rat(2, 3));
  CHECK(d[1] == make_rat(1, 3));
}

TEST_CASE("nu invariants across a small grid") {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 3; k <= 5; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const ScaledDistribution d = nu(params(m, k));
      REQUIRE(d.support_max() == m - 1);
      CHECK(d.total() == rat(1));
      CHECK(d.has_mean(m - 1, k));
      for (int i = 0; i + 1 < m; ++i) CHECK(d[i] > d[i + 1]);
      CHECK(sgn(d[m - 1]) > 0);
      const CapacityResult c = capacity(params(m, k));
      CHECK(std::abs(entropy(d) - std::log(c.capacity)) <= 1e-9);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(capacity(params(1, 3)), error);
  CHECK_THROWS_AS(capacity(params(2, 2)), error);
  Params p = params(2, 3);
  p.tol = 0;
  CHECK_THROWS_AS(p.validate(), error);
}
