#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/distributions.hpp"
#include "sumfree/progression.hpp"
#include "sumfree/rng.hpp"
#include "sumfree/rounding.hpp"

namespace sumfree {

// Smallest prime >= exp((H_tau - H_nu)/(k-2) * n), or the override when given.
// The asymptotic analysis multiplies this by polynomial prefactors; those are
// dropped at desk scale and the provenance records the formula actually used.
std::uint64_t choose_prime(double H_tau, double H_nu, int n, int k,
                           std::optional<std::uint64_t> override_prime = {});

// All vectors in {0,...,m-1}^n with exactly nu_n(i)*n coordinates equal to i,
// in lexicographic order. Requires every nu_n(i)*n integral.
std::vector<std::vector<int>> enumerate_X0(const ScaledDistribution& nu_n, int m, int n,
                                           std::uint64_t cap);

// Lift into Z^{n+k-1}: positions 1..k-1 append the i-th standard basis vector;
// position k maps x to (x - (m-1)*1, -1, ..., -1). Lifts of a zero-sum tuple
// sum to the zero vector.
std::vector<long long> lift(const std::vector<int>& x, int i, int m, int k);

// f(v) = sum c_j v_j mod P with coefficients drawn from the counter RNG.
struct LinearMap {
  std::uint64_t P = 0;
  std::vector<std::uint64_t> coeffs;
  std::uint64_t seed = 0;

  std::uint64_t operator()(const std::vector<long long>& v) const;
};

LinearMap sample_linear_map(std::uint64_t seed, std::uint64_t P, int dim);

enum class CollectionMode { integer_vectors, zm };

// L k-tuples of length-n vectors plus the provenance needed to re-run them.
struct SumFreeCollection {
  CollectionMode mode = CollectionMode::integer_vectors;
  int m = 0;
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t P = 0;
  std::vector<std::vector<std::vector<int>>> tuples;  // L x k x n

  std::size_t size() const { return tuples.size(); }
};

// Z_m view: members reduce mod m, the k-th member after subtracting (m-1)*1.
SumFreeCollection project_to_zm(const SumFreeCollection& c);

struct ConstructOptions {
  std::optional<std::uint64_t> prime_override;
  std::optional<PfsMethod> pfs_method;  // default: greedy up to floor(P/k)<=5000, else behrend
  std::uint64_t x0_cap = 2'000'000;
  double tol = 1e-12;
};

struct ConstructResult {
  SumFreeCollection integer_view;
  SumFreeCollection zm_view;
  FieldSetup field;
  // run facts, in CSV summary order
  double H_tau_tilde = 0;
  double H_nu_n = 0;
  std::uint64_t x0_size = 0;
  std::uint64_t candidate_count = 0;
  std::uint64_t isolated_count = 0;
  std::string prime_formula = "next_prime(exp((H_tau-H_nu)/(k-2)*n)), prefactors dropped";
  std::vector<std::string> warnings;
};

// Full pipeline: nu -> tau -> rounding -> prime -> progression-free line ->
// linear hash -> candidate search -> isolation -> Z_m projection.
// Deterministic given (m,k,n,seed,options); never retries seeds internally.
ConstructResult construct(int m, int k, int n, std::uint64_t seed,
                          const ConstructOptions& options = {});

}  // namespace sumfree
