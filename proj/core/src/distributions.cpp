#include "sumfree/distributions.hpp"

#include <cmath>

namespace sumfree {

rat ScaledDistribution::total() const {
  rat t(0);
  for (const rat& w : weights) t += w;
  return t;
}

rat ScaledDistribution::first_moment() const {
  rat t(0);
  for (size_t i = 0; i < weights.size(); ++i) t += rat(static_cast<long>(i)) * weights[i];
  return t;
}

bool ScaledDistribution::is_zero() const {
  for (const rat& w : weights)
    if (sgn(w) != 0) return false;
  return true;
}

void ScaledDistribution::validate_nonnegative() const {
  for (size_t i = 0; i < weights.size(); ++i)
    require(sgn(weights[i]) >= 0, errc::invalid_argument,
            "negative weight at index " + std::to_string(i));
}

bool ScaledDistribution::has_mean(long num, long den) const {
  return first_moment() * rat(den) == rat(num) * total();
}

double mean(const ScaledDistribution& d) {
  rat t = d.total();
  require(sgn(t) > 0, errc::invalid_argument, "mean of a zero distribution");
  return to_double(d.first_moment() / t);
}

double entropy(const ScaledDistribution& d) {
  d.validate_nonnegative();
  return entropy_masses(d.weights);
}

rat capacity_polynomial(int m, int k, const rat& g) {
  // Horner evaluation of sum_{i=0}^{m-1} (k*i-(m-1)) g^i.
  rat acc(0);
  for (int i = m - 1; i >= 0; --i) acc = acc * g + rat(static_cast<long>(k) * i - (m - 1));
  return acc;
}

std::pair<rat, rat> gamma_bracket(int m, int k, int bits) {
  require(m >= 2 && k >= 3 && bits >= 1, errc::invalid_argument, "bad bracket request");
  rat lo(0), hi(1);
  // Signs at the ends: -(m-1) < 0 and m(m-1)(k-2)/2 > 0; bisection keeps them.
  for (int step = 0; step < bits; ++step) {
    rat mid = (lo + hi) / 2;
    int s = sgn(capacity_polynomial(m, k, mid));
    if (s == 0) return {mid, mid};
    if (s < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

double gamma_root(const Params& p) {
  p.validate();
  auto [lo, hi] = gamma_bracket(p.m, p.k, 64);
  return to_double((lo + hi) / 2);
}

CapacityResult capacity(const Params& p) {
  p.validate();
  CapacityResult r;
  r.gamma = gamma_root(p);
  double s = 0;
  for (int i = 0; i < p.m; ++i) s += std::pow(r.gamma, i);
  r.capacity = s / std::pow(r.gamma, static_cast<double>(p.m - 1) / p.k);
  r.entropy_nu = entropy(nu(p));
  require(std::abs(r.entropy_nu - std::log(r.capacity)) <= 10 * p.tol, errc::internal,
          "entropy of the geometric weights drifted from ln(capacity)");
  return r;
}

ScaledDistribution nu(const Params& p) {
  p.validate();
  auto [lo, hi] = gamma_bracket(p.m, p.k, 96);
  rat g = (lo + hi) / 2;

  ScaledDistribution d;
  d.weights.assign(static_cast<size_t>(p.m), rat(0));
  rat pow(1), total(0);
  for (int i = 0; i < p.m; ++i) {
    d.weights[static_cast<size_t>(i)] = pow;
    total += pow;
    pow *= g;
  }
  for (auto& w : d.weights) w /= total;

  // g is a 2^-96 bracket midpoint, so the mean sum_i i*w_i misses (m-1)/k by a
  // comparably tiny e. Shift index 0 by delta and renormalize: the first
  // moment is untouched at 0, so the mean lands on (m-1)/k exactly.
  rat target = make_rat(p.m - 1, p.k);
  rat e = d.first_moment() - target;
  rat delta = e * rat(p.k) / rat(p.m - 1);
  d.weights[0] += delta;
  rat scale = rat(1) + delta;
  for (auto& w : d.weights) w /= scale;

  require(d.total() == 1, errc::internal, "geometric weights failed to normalize");
  require(d.first_moment() == target, errc::internal, "geometric weight mean repair failed");
  for (int i = 0; i + 1 < p.m; ++i)
    require(d[i] > d[i + 1], errc::internal, "geometric weights lost strict decrease");
  require(sgn(d[p.m - 1]) > 0, errc::internal, "geometric weights lost positivity");
  return d;
}

}  // namespace sumfree
