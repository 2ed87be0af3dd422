#include <doctest.h>

#include <cmath>

#include "sumfree/decomposition.hpp"
#include "sumfree/distributions.hpp"
#include "sumfree/rounding.hpp"

using namespace sumfree;

namespace {

SymmetricTensor forced_m2_tensor() {
  ScaledDistribution v;
  v.weights = {make_rat(2, 3), make_rat(1, 3)};
  return symmetric_marginal_tensor(v, 3);
}

bool multiple_of(const rat& x, const rat& step) { return rat(x / step).get_den() == 1; }

}  // namespace

TEST_CASE("rounding the forced m=2 tensor is exact") {
  const RoundedPair p = round_tau(forced_m2_tensor(), 6);
  CHECK(p.m == 2);
  CHECK(p.k == 3);
  CHECK(p.n == 6);
  CHECK(p.tau_tilde.weight.at({1, 0, 0}) == make_rat(1, 3));
  CHECK(p.linf_gap == rat(0));
  CHECK_FALSE(p.has_zero_entry);
  CHECK(p.nu_n[0] == make_rat(2, 3));
  CHECK(p.nu_n[1] == make_rat(1, 3));
}

TEST_CASE("rounding at m=3 lands on the 1/n grid") {
  Params prm;
  prm.m = 3;
  prm.k = 3;
  const SymmetricTensor tau = symmetric_marginal_tensor(nu(prm), 3);

  for (int n : {9, 12, 30}) {
    CAPTURE(n);
    const RoundedPair p = round_tau(tau, n);
    p.tau_tilde.validate();
    CHECK(p.tau_tilde.total() == rat(1));

    const rat step = make_rat(3, n);
    const std::vector<int> special = {2, 0, 0};
    for (const auto& [rep, w] : p.tau_tilde.weight) {
      if (rep == special) {
        CHECK(multiple_of(w, make_rat(1, n)));
      } else {
        CHECK(multiple_of(w, step));
        // Rounded down, never up.
        CHECK(w <= tau.weight.at(rep));
      }
    }

    const ScaledDistribution m = marginal(p.tau_tilde);
    for (int i = 0; i <= 2; ++i) {
      CHECK(m[i] == p.nu_n[i]);
      CHECK(multiple_of(m[i], make_rat(1, n)));
    }
    CHECK(p.nu_n.has_mean(2, 3));
    CHECK(p.linf_gap * rat(n) <= rat(27));
  }
}

TEST_CASE("rounding rejects bad dimensions") {
  const SymmetricTensor t = forced_m2_tensor();
  CHECK_THROWS_AS(round_tau(t, 0), error);
  CHECK_THROWS_AS(round_tau(t, 7), error);  // not a multiple of k
}

TEST_CASE("entropy gap of the forced tensor is zero") {
  const RoundedPair p = round_tau(forced_m2_tensor(), 6);
  const EntropyGapReport g = entropy_gap_report(p, 3);
  CHECK(g.h_tau_tilde == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(std::abs(g.gap) <= 1e-9);
  CHECK(std::abs(g.implied_constant) <= 1e-8);
}

TEST_CASE("entropy gap is nonnegative for a genuinely rounded tensor") {
  Params prm;
  prm.m = 3;
  prm.k = 3;
  const RoundedPair p = round_tau(symmetric_marginal_tensor(nu(prm), 3), 12);
  const EntropyGapReport g = entropy_gap_report(p, 3);
  CHECK(g.h_maxent >= g.h_tau_tilde - 1e-7);
  CHECK(g.gap == doctest::Approx(g.h_maxent - g.h_tau_tilde));
}
