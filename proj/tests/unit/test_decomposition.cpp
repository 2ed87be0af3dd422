#include <doctest.h>

#include <vector>

#include "sumfree/decomposition.hpp"

using namespace sumfree;

namespace {

ScaledDistribution dist(std::vector<long> w) {
  ScaledDistribution d;
  d.weights.reserve(w.size());
  for (long v : w) d.weights.push_back(rat(v));
  return d;
}

bool equal_dist(const ScaledDistribution& a, const ScaledDistribution& b) {
  if (a.support_max() != b.support_max()) return false;
  for (int i = 0; i <= a.support_max(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// Closed-form evaluation of the peeling atom, written out case by case; the
// implementation assembles it from witness atoms instead, so agreement here
// checks the bookkeeping.
std::vector<rat> alpha_closed_form(int n, int k, int j) {
  const int l = n / j;
  const int r = n - l * j;
  const int ceil_nk = (n + k - 1) / k;
  std::vector<rat> a(static_cast<size_t>(j) + 1, rat(0));
  if (l == k) {
    a[static_cast<size_t>(j)] = rat(k);
  } else if (r != ceil_nk || n < 2 * k) {
    if (r >= 1) {
      a[0] = rat((k - l - 1) * (j + 1 - r));
      for (int i = r; i <= j - 1; ++i) a[static_cast<size_t>(i)] = rat(2);
      a[static_cast<size_t>(j)] = rat((l - 1) * (j + 1 - r) + 2);
    } else {
      a[0] = rat((k - l - 1) * (j + 1) + 2);
      for (int i = 1; i <= j - 1; ++i) a[static_cast<size_t>(i)] = rat(2);
      a[static_cast<size_t>(j)] = rat((l - 1) * (j + 1) + 2);
    }
  } else if (l <= k - 2) {
    a[0] = rat((k - l - 1) * (j - 1 - r) + 2 * (k - l - 2)) + make_rat(4, r + 1);
    for (int i = 1; i <= r; ++i) a[static_cast<size_t>(i)] = make_rat(4, r + 1);
    for (int i = r + 1; i <= j - 1; ++i) a[static_cast<size_t>(i)] = rat(2);
    a[static_cast<size_t>(j)] = rat((l - 1) * (j - 1 - r) + 2 * l);
  } else {
    for (int i = r + 1; i <= j - 1; ++i) a[static_cast<size_t>(i)] = rat(2);
    a[static_cast<size_t>(j)] = rat((k - 2) * (j - 1 - r));
  }
  return a;
}

}  // namespace

TEST_CASE("tameness verdicts") {
  SUBCASE("n=1 needs only mean and monotonicity") {
    ScaledDistribution d;
    d.weights = {make_rat(2, 3), make_rat(1, 3)};
    const TameReport r = is_tame(d, 3);
    CHECK(r.tame());
    CHECK(r.ok_mean);
    CHECK(r.applies_monotone);
    CHECK_FALSE(r.applies_boundary);
    CHECK_FALSE(r.applies_convexity);
  }

  SUBCASE("boundary equality counts as tame") {
    const TameReport r = is_tame(dist({4, 3, 2, 1}), 3);
    CHECK(r.tame());
    CHECK(r.applies_boundary);
    CHECK(r.boundary_slack == rat(0));  // 4 = 2*1 + 2
    CHECK_FALSE(r.applies_convexity);   // needs n >= 2k
  }

  SUBCASE("monotone violation") {
    const TameReport r = is_tame(dist({1, 0, 0, 1}), 3);
    CHECK_FALSE(r.tame());
    CHECK_FALSE(r.ok_monotone);
    CHECK(r.monotone_slack == rat(-1));  // 0 - 1 at the tail
  }

  SUBCASE("mean violation") {
    const TameReport r = is_tame(dist({1, 2, 0, 0}), 3);
    CHECK_FALSE(r.tame());
    CHECK_FALSE(r.ok_mean);
    CHECK(r.mean_gap == rat(-1));  // 2 - (3/3)*3
  }

  SUBCASE("negative weights are rejected outright") {
    ScaledDistribution d;
    d.weights = {rat(1), rat(-1)};
    const TameReport r = is_tame(d, 3);
    CHECK_FALSE(r.nonnegative);
    CHECK_FALSE(r.tame());
  }
}

TEST_CASE("is_tame mean bookkeeping on (1,0,0,1)") {
  // first moment 3, total 2, mean gap 3 - 2 = 1: the mean check fails too.
  const TameReport r = is_tame(dist({1, 0, 0, 1}), 3);
  CHECK(r.mean_gap == rat(1));
  CHECK_FALSE(r.ok_mean);
}

TEST_CASE("simple combination arithmetic") {
  SimpleCombination c;
  c.n = 3;
  c.k = 3;
  c.add({1, 2, 0}, rat(2));  // keyed as orbit rep (2,1,0)
  c.add({2, 1, 0}, rat(1));
  CHECK(c.coeffs.size() == 1);
  CHECK(c.coeffs.at({2, 1, 0}) == rat(3));

  const ScaledDistribution e = evaluate(c);
  CHECK(equal_dist(e, dist({3, 3, 3, 0})));

  CHECK_THROWS_AS(c.add({1, 1, 0}, rat(1)), error);   // sums to 2, not 3
  CHECK_THROWS_AS(c.add({2, 1, 0}, rat(-1)), error);  // negative coefficient
  CHECK_THROWS_AS(c.add({5, -2, 0}, rat(1)), error);  // negative entry
}

TEST_CASE("alpha hand values") {
  SUBCASE("n=1, k=3, j=1") {
    const AlphaResult a = alpha(1, 3, 1);
    REQUIRE(a.alpha.support_max() == 1);
    CHECK(a.alpha[0] == rat(4));
    CHECK(a.alpha[1] == rat(2));
    CHECK(a.witness.coeffs.size() == 1);
    CHECK(a.witness.coeffs.at({1, 0, 0}) == rat(2));
  }

  SUBCASE("n=3, k=3, j=1 hits the l=k closed form") {
    const AlphaResult a = alpha(3, 3, 1);
    CHECK(a.alpha[0] == rat(0));
    CHECK(a.alpha[1] == rat(3));
    CHECK(a.witness.coeffs.size() == 1);
    CHECK(a.witness.coeffs.at({1, 1, 1}) == rat(1));
  }

  SUBCASE("n=3, k=3, j=2") {
    const AlphaResult a = alpha(3, 3, 2);
    CHECK(a.alpha[0] == rat(2));
    CHECK(a.alpha[1] == rat(2));
    CHECK(a.alpha[2] == rat(2));
  }

  SUBCASE("n=3, k=3, j=3") {
    const AlphaResult a = alpha(3, 3, 3);
    CHECK(a.alpha[0] == rat(6));
    CHECK(a.alpha[1] == rat(2));
    CHECK(a.alpha[2] == rat(2));
    CHECK(a.alpha[3] == rat(2));
  }

  SUBCASE("n=6, k=3, j=4 takes the fractional case") {
    // l=1, r=2=ceil(6/3), n>=2k: coefficients 2/(r+1) appear.
    const AlphaResult a = alpha(6, 3, 4);
    CHECK(a.alpha[0] == make_rat(7, 3));
    CHECK(a.alpha[1] == make_rat(4, 3));
    CHECK(a.alpha[2] == make_rat(4, 3));
    CHECK(a.alpha[3] == rat(2));
    CHECK(a.alpha[4] == rat(2));
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(alpha(3, 3, 0), error);
    CHECK_THROWS_AS(alpha(3, 3, 4), error);
    CHECK_THROWS_AS(alpha(12, 3, 3), error);  // k(j+1) = 12 < 24 = 2n
  }
}

TEST_CASE("alpha matches its closed-form evaluation everywhere") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 20; ++n) {
      for (int j = 1; j <= n; ++j) {
        if (k * (j + 1) < 2 * n) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(j);
        const AlphaResult a = alpha(n, k, j);
        const std::vector<rat> want = alpha_closed_form(n, k, j);
        REQUIRE(a.alpha.support_max() == n);
        for (int i = 0; i <= j; ++i) CHECK(a.alpha[i] == want[static_cast<size_t>(i)]);
        for (int i = j + 1; i <= n; ++i) CHECK(a.alpha[i] == rat(0));
        CHECK(equal_dist(evaluate(a.witness), a.alpha));
      }
    }
  }
}

TEST_CASE("slack_reduce") {
  SUBCASE("boundary equality returns the input untouched") {
    const ScaledDistribution psi = dist({4, 3, 2, 1});
    const SlackResult s = slack_reduce(psi, 3);
    CHECK(equal_dist(s.phi, psi));
    CHECK(s.used.empty());
  }

  SUBCASE("positive slack gets peeled away exactly") {
    // mean 4/3, monotone, slack 1 at the boundary.
    const ScaledDistribution psi = dist({1, 4, 4, 0, 0});
    REQUIRE(is_tame(psi, 3).tame());
    const SlackResult s = slack_reduce(psi, 3);
    const TameReport r = is_tame(s.phi, 3);
    CHECK(r.tame());
    CHECK(r.boundary_slack == rat(0));
    // psi - phi reconstructs from the witness.
    ScaledDistribution recon = evaluate(s.used);
    REQUIRE(recon.support_max() == psi.support_max());
    for (int i = 0; i <= psi.support_max(); ++i) CHECK(rat(psi[i] - s.phi[i]) == recon[i]);
  }

  SUBCASE("non-tame input is rejected") {
    CHECK_THROWS_AS(slack_reduce(dist({1, 0, 0, 1}), 3), error);
  }
}

TEST_CASE("tame_decompose hand traces") {
  SUBCASE("n=1: forced single atom") {
    ScaledDistribution psi;
    psi.weights = {make_rat(2, 3), make_rat(1, 3)};
    const SimpleCombination c = tame_decompose(psi, 3);
    CHECK(c.coeffs.size() == 1);
    CHECK(c.coeffs.at({1, 0, 0}) == make_rat(1, 3));
  }

  SUBCASE("n=0 closed form") {
    ScaledDistribution psi;
    psi.weights = {rat(6)};
    const SimpleCombination c = tame_decompose(psi, 3);
    CHECK(c.coeffs.at({0, 0, 0}) == rat(2));
    CHECK(equal_dist(evaluate(c), psi));
  }

  SUBCASE("identically zero gives the empty combination") {
    CHECK(tame_decompose(dist({0, 0, 0, 0}), 3).empty());
  }

  SUBCASE("(4,3,2,1) peels deterministically") {
    const ScaledDistribution psi = dist({4, 3, 2, 1});
    const SimpleCombination c = tame_decompose(psi, 3);
    CHECK(equal_dist(evaluate(c), psi));
    for (const auto& [tuple, coeff] : c.coeffs) CHECK(sgn(coeff) >= 0);
    // Pin the deterministic peel order: top index first, then the remainder.
    CHECK(c.coeffs.at({3, 0, 0}) == rat(1));
    CHECK(c.coeffs.at({2, 1, 0}) == rat(2));
    CHECK(c.coeffs.at({1, 1, 1}) == make_rat(1, 3));
    CHECK(c.coeffs.size() == 3);
  }

  SUBCASE("n > k goes through the reduction") {
    const ScaledDistribution psi = dist({7, 6, 5, 4, 3, 2, 1});
    REQUIRE(is_tame(psi, 3).tame());
    const SimpleCombination c = tame_decompose(psi, 3);
    CHECK(equal_dist(evaluate(c), psi));
    for (const auto& [tuple, coeff] : c.coeffs) {
      CHECK(sgn(coeff) >= 0);
      int s = 0;
      for (int v : tuple) s += v;
      CHECK(s == 6);
      CHECK(tuple.size() == 3);
    }
  }

  SUBCASE("non-tame input names the failing condition") {
    // (5,1,3,1) has mean 1 and boundary equality but 1 < 3 inside the tail.
    CHECK_THROWS_WITH_AS(tame_decompose(dist({5, 1, 3, 1}), 3),
                         doctest::Contains("monotonicity"), error);
    CHECK_THROWS_WITH_AS(tame_decompose(dist({1, 2, 0, 0}), 3),
                         doctest::Contains("mean gap"), error);
  }
}

TEST_CASE("symmetric_marginal_tensor") {
  SUBCASE("forced tensor at m=2") {
    ScaledDistribution v;
    v.weights = {make_rat(2, 3), make_rat(1, 3)};
    const SymmetricTensor t = symmetric_marginal_tensor(v, 3);
    t.validate();
    CHECK(t.weight.size() == 1);
    CHECK(t.weight.at({1, 0, 0}) == make_rat(1, 3));
  }

  SUBCASE("strict positivity and exact marginal at m=3") {
    Params p;
    p.m = 3;
    p.k = 3;
    const ScaledDistribution v = nu(p);
    const SymmetricTensor t = symmetric_marginal_tensor(v, 3);
    t.validate();
    CHECK(t.weight.size() == 2);  // orbits of (2,0,0) and (1,1,0)
    CHECK(t.min_weight() > rat(0));
    const ScaledDistribution m = marginal(t);
    for (int i = 0; i <= 2; ++i) CHECK(m[i] == v[i]);
  }

  SUBCASE("non-strict input is rejected") {
    ScaledDistribution flat;
    flat.weights = {make_rat(1, 2), make_rat(1, 2)};  // mean 1/2, not 1/3
    CHECK_THROWS_AS(symmetric_marginal_tensor(flat, 3), error);
  }
}
