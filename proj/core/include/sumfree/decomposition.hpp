#pragma once

#include <map>
#include <vector>

#include "sumfree/compositions.hpp"
#include "sumfree/distributions.hpp"

namespace sumfree {

// Nonnegative coefficients on composition atoms. The atom for a k-tuple
// (a_1,...,a_k) summing to n is the scaled distribution 1_{a_1}+...+1_{a_k};
// coefficients are keyed by the descending orbit representative and aggregate
// the whole orbit (the atom itself only depends on the multiset).
struct SimpleCombination {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, rat> coeffs;

  bool empty() const { return coeffs.empty(); }
  void add(const std::vector<int>& tuple, const rat& coeff);
  void add_scaled(const SimpleCombination& other, const rat& scale);
};

// Evaluates sum lambda(a) * (1_{a_1}+...+1_{a_k}) on {0,...,n}.
ScaledDistribution evaluate(const SimpleCombination& c);

// Verdicts and exact slacks for the four tameness conditions.
// Applicability thresholds: (ii) iff n>=1, (iii) iff n>=k, (iv) iff n>=2k.
struct TameReport {
  int n = 0;
  int k = 0;
  bool nonnegative = true;
  bool ok_mean = false;        // (i)  sum i*w = (n/k) sum w
  bool ok_monotone = true;     // (ii) w(1) >= w(2) >= ... >= w(n)
  bool ok_boundary = true;     // (iii) w(0) >= (k-1)w(n)+(k-2)w(n-1)+...+w(n-k+2)
  bool ok_convexity = true;    // (iv)  2w(floor(n/k)) <= w(floor(n/k)-1)+w(ceil(n/k))
  bool applies_monotone = false;
  bool applies_boundary = false;
  bool applies_convexity = false;
  rat mean_gap;                // sum i*w - (n/k) sum w
  rat monotone_slack;          // min over i of w(i)-w(i+1), when applicable
  rat boundary_slack;          // (iii) LHS - RHS, when applicable
  rat convexity_slack;         // (iv)  RHS - LHS, when applicable

  bool tame() const;
  std::string describe_failure() const;
};

TameReport is_tame(const ScaledDistribution& psi, int k);

// The peeling atom alpha_j together with its witness combination.
// Preconditions: 1 <= j <= n and k*(j+1) >= 2n. Selects the l=k closed form
// or one of the three cases of the explicit construction; the returned
// distribution is exactly the witness evaluation.
struct AlphaResult {
  ScaledDistribution alpha;
  SimpleCombination witness;
};
AlphaResult alpha(int n, int k, int j);

// Reduces a tame psi to a tame phi with exact equality in condition (iii),
// peeling multiples of alpha_j off the top of the support. psi - phi equals
// the returned witness. Requires n >= k.
struct SlackResult {
  ScaledDistribution phi;
  SimpleCombination used;
};
SlackResult slack_reduce(const ScaledDistribution& psi, int k);

// Writes a tame psi as a nonnegative combination of atoms, exactly.
// Base cases 0 <= n <= k are closed-form/peeling; n > k reduces to n-k via
// slack_reduce, the k-1 boundary atoms, and an index shift.
SimpleCombination tame_decompose(const ScaledDistribution& psi, int k);

// Strictly positive symmetric tensor with prescribed marginal.
// Requires nu strictly decreasing, strictly positive, mean n/k exact, and
// (if n >= k) a strict convexity margin; all margins must clear 100*tol.
// Output weight on every orbit is > 0 and marginal(output) equals nu
// normalized, exactly.
SymmetricTensor symmetric_marginal_tensor(const ScaledDistribution& nu, int k,
                                          double tol = 1e-12);

}  // namespace sumfree
