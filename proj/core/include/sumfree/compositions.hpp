#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sumfree/distributions.hpp"

namespace sumfree {

// T_{r,arity}: all arity-tuples of nonnegative integers summing to r,
// in lexicographic order.
struct CompositionTable {
  int r = 0;
  int arity = 0;
  std::vector<std::vector<int>> elements;
};

CompositionTable enumerate_compositions(int r, int arity);

// Orbit representative: the tuple sorted in descending order.
std::vector<int> orbit_rep(std::vector<int> t);
// Number of distinct permutations of the representative.
std::uint64_t orbit_size(const std::vector<int>& rep);

// S_arity-symmetric weights on T_{r,arity}, stored once per orbit.
// `weight[rep]` is the per-element value tau(t) shared by the whole orbit,
// so total mass = sum over orbits of orbit_size * weight.
struct SymmetricTensor {
  int r = 0;
  int arity = 0;
  std::map<std::vector<int>, rat> weight;
  bool real_mode = false;  // weights are exact images of fitted doubles

  rat total() const;
  rat min_weight() const;
  void validate() const;  // keys descending, sums r, weights >= 0
};

// Common single-coordinate projection; exact. Requires normalized input.
ScaledDistribution marginal(const SymmetricTensor& t);

double entropy(const SymmetricTensor& t);

// Orbit-average of arbitrary nonnegative weights on the full table.
// Entropy never decreases under this map (concavity).
SymmetricTensor symmetrize(const CompositionTable& table, const std::vector<rat>& w);

struct MaxentOptions {
  int iteration_cap = 10000;
  double tol = 1e-12;
};

// Iterative proportional fitting over T_{r,arity}: cyclic coordinate updates
// until every coordinate projection is within tol (l1) of target, then an
// exact orbit average. Result is symmetric by storage and its projections are
// re-verified against target after symmetrization. Throws errc::nonconvergence
// with the residual in the message if the cap is hit.
SymmetricTensor maxent_with_marginals(const ScaledDistribution& target, int r, int arity,
                                      const MaxentOptions& opt = {});

}  // namespace sumfree
