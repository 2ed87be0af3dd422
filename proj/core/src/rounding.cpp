#include "sumfree/rounding.hpp"

#include <cmath>
#include <set>

namespace sumfree {

RoundedPair round_tau(const SymmetricTensor& tau, int n) {
  tau.validate();
  const int k = tau.arity;
  const int r = tau.r;
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(r >= 1, errc::invalid_argument, "index sum must be >= 1");
  require(n >= 1 && n % k == 0, errc::invalid_argument, "n must be a positive multiple of k");
  require(tau.total() == 1, errc::invalid_argument, "input tensor must be normalized");

  RoundedPair out;
  out.m = r + 1;
  out.k = k;
  out.n = n;
  out.tau_tilde.r = r;
  out.tau_tilde.arity = k;

  const rat step = make_rat(k, n);
  std::vector<int> special(static_cast<size_t>(k), 0);
  special[0] = r;

  CompositionTable table = enumerate_compositions(r, k);
  std::set<std::vector<int>> reps;
  for (const auto& element : table.elements) reps.insert(orbit_rep(element));

  rat residual(1);
  rat gap(0);
  for (const auto& rep : reps) {
    if (rep == special) continue;
    auto it = tau.weight.find(rep);
    const rat w = it == tau.weight.end() ? rat(0) : it->second;
    rat w_tilde = floor_to_multiple(w, step);
    out.tau_tilde.weight[rep] = w_tilde;
    residual -= rat(bigint(orbit_size(rep))) * w_tilde;
    gap = std::max(gap, rat(w - w_tilde));
    if (sgn(w_tilde) == 0) out.has_zero_entry = true;
  }

  // The permutations of (r,0,...,0) absorb what the floors released.
  require(sgn(residual) >= 0, errc::internal, "rounding residual negative");
  require(rat(residual / step).get_den() == 1, errc::internal,
          "rounding residual not a step multiple");
  const rat special_w = residual / rat(k);
  out.tau_tilde.weight[special] = special_w;
  {
    auto it = tau.weight.find(special);
    const rat w = it == tau.weight.end() ? rat(0) : it->second;
    gap = std::max(gap, rat(abs(special_w - w)));
    if (sgn(special_w) == 0) out.has_zero_entry = true;
  }
  out.linf_gap = gap;

  bigint mk;
  mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(out.m),
                static_cast<unsigned long>(k));
  require(gap * rat(n) <= rat(mk), errc::internal, "rounding moved an entry too far");

  out.tau_tilde.validate();
  require(out.tau_tilde.total() == 1, errc::internal, "rounded tensor lost normalization");

  out.nu_n = marginal(out.tau_tilde);
  for (int v = 0; v <= r; ++v)
    require(rat(out.nu_n[v] * rat(n)).get_den() == 1, errc::internal,
            "rounded marginal entry not a multiple of 1/n");
  require(out.nu_n.has_mean(r, k), errc::internal, "rounded marginal mean drifted");
  return out;
}

EntropyGapReport entropy_gap_report(const RoundedPair& pair, int k, double tol) {
  require(k == pair.k, errc::invalid_argument, "arity mismatch");
  require(tol > 0, errc::invalid_argument, "tol must be positive");

  MaxentOptions opt;
  opt.tol = tol;
  SymmetricTensor tau0 = maxent_with_marginals(pair.nu_n, pair.m - 1, k, opt);

  EntropyGapReport rep;
  rep.h_tau_tilde = entropy(pair.tau_tilde);
  rep.h_maxent = entropy(tau0);
  rep.gap = rep.h_maxent - rep.h_tau_tilde;
  require(rep.gap >= -100 * tol, errc::precision,
          "fitted max-entropy tensor fell below the rounded tensor");
  rep.implied_constant = rep.gap * pair.n / std::log(static_cast<double>(pair.n));
  return rep;
}

}  // namespace sumfree
