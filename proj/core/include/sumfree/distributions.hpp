#pragma once

#include <utility>
#include <vector>

#include "sumfree/rational.hpp"

namespace sumfree {

// Global problem parameters. m is the modulus of the ambient group Z_m^n,
// k the number of colors, n the exponent where one is in play.
struct Params {
  int m = 2;
  int k = 3;
  int n = 0;
  double tol = 1e-12;

  void validate() const {
    require(m >= 2, errc::invalid_argument, "m must be >= 2");
    require(k >= 3, errc::invalid_argument, "k must be >= 3");
    require(n >= 0, errc::invalid_argument, "n must be >= 0");
    require(tol > 0, errc::invalid_argument, "tol must be positive");
  }
};

struct CapacityResult {
  double gamma = 0;     // minimizer in (0,1)
  double capacity = 0;  // (1+gamma+...+gamma^{m-1}) / gamma^{(m-1)/k}
  double entropy_nu = 0;  // nats; equals ln(capacity) up to tolerance
};

// Nonnegative weights on {0,...,support_max}. Unnormalized in general;
// "mean n/k" always means sum(i*w_i) == (n/k)*sum(w_i).
struct ScaledDistribution {
  std::vector<rat> weights;

  int support_max() const { return static_cast<int>(weights.size()) - 1; }
  const rat& operator[](int i) const { return weights[static_cast<size_t>(i)]; }
  rat& operator[](int i) { return weights[static_cast<size_t>(i)]; }

  rat total() const;
  rat first_moment() const;       // sum i*w_i
  bool is_zero() const;
  void validate_nonnegative() const;
  // Exact check of sum(i*w_i) == (num/den)*sum(w_i).
  bool has_mean(long num, long den) const;
};

double mean(const ScaledDistribution& d);
// Entropy in nats; requires total mass 1 and nonnegative entries (0 ln 0 := 0).
double entropy(const ScaledDistribution& d);

// Value of the cleared-denominator polynomial sum_{i=0}^{m-1} (k*i-(m-1)) g^i.
// Negative at 0, positive at 1; its unique root in (0,1) is the capacity minimizer.
rat capacity_polynomial(int m, int k, const rat& g);

// Dyadic bisection bracket [lo,hi] around the root, hi-lo <= 2^-bits.
// Both endpoints are exact rationals; exact hits collapse the bracket.
std::pair<rat, rat> gamma_bracket(int m, int k, int bits);

double gamma_root(const Params& p);
CapacityResult capacity(const Params& p);

// nu_{m,k}: weights gamma^i / sum_j gamma^j on {0,...,m-1}, as exact rationals
// built from a dyadic rationalization of gamma. The rationalization is
// mean-repaired so that mean == (m-1)/k holds exactly (the decomposition
// algorithms need the mean exactly, not within tol), then renormalized to
// total mass exactly 1. Strict decrease, positivity and the strict convexity
// margin are re-verified on the result.
ScaledDistribution nu(const Params& p);

}  // namespace sumfree
