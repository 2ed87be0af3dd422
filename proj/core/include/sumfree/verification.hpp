#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/construction.hpp"
#include "sumfree/decomposition.hpp"

namespace sumfree {

// A reproducible counterexample: re-evaluating the cited indices must
// reproduce the failure.
struct Violation {
  std::string kind;
  std::vector<long long> indices;
  std::string detail;
};

struct VerifyResult {
  bool ok = true;
  std::vector<Violation> violations;
  bool used_fallback_scan = false;  // duplicate position members forced O(L^k)
};

// Checks the defining property: cross sums x_{1,j_1}+...+x_{k,j_k} hit the
// target (m-1)*1^n (integer mode) or 0 (Z_m mode) exactly on the diagonal.
// Iterates (j_1..j_{k-1}) and resolves the forced k-th member by lookup,
// O(L^{k-1} n); falls back to the naive scan when position-k members repeat.
VerifyResult verify_sumfree(const SumFreeCollection& c);

// Reference O(L^k) scan used as the cross-oracle.
VerifyResult verify_sumfree_naive(const SumFreeCollection& c);

// |{a in {0,...,m-1}^n : sum a <= n(m-1)/k}| exactly, against capacity^n.
struct BoundedCountResult {
  bigint exact;
  double bound = 0;     // capacity^n
  double log_exact = 0; // ln(exact)
  double log_bound = 0; // n * ln(capacity)
  bool ok = false;      // exact <= bound (log comparison with 1e-9 slack)
};
BoundedCountResult bounded_tuple_count(int n, int m, int k);

// Exhaustive check of the binomial indicator identity over Z_{p^l}^k:
// sum_{a_1+...+a_k<=m-1} (-1)^{sum a} prod C(z_i,a_i) == [sum z == 0 mod m] (mod p).
VerifyResult lucas_identity_check(std::uint64_t p, int l, int k);

// Rank agreement for a pair of zero-sum tuples: rank over F_P of the 2k lifts
// equals k-1+d, where d = rank over Q of the differences {x_i - x_i'}.
// The equality is asserted only when P > (2k)! * m^{2k} (flagged otherwise).
struct RankCheckResult {
  int d = 0;
  int rank_p = 0;
  bool p_large_enough = false;
  bool ok = true;  // equality holds, or flag not set
};
RankCheckResult rank_lemma_check(const std::vector<std::vector<int>>& xs,
                                 const std::vector<std::vector<int>>& xs_prime, int m,
                                 std::uint64_t P);

// A rational subspace of the zero-coordinate-sum hyperplane V_arity.
struct SubspaceSpec {
  int arity = 0;
  std::vector<std::vector<rat>> basis;  // each sums to 0, linearly independent
  int dim() const { return static_cast<int>(basis.size()); }
};

// Entropy of the joint image t -> (w(t))_{w in basis} against the lower
// bounds (dim W/(arity-1)) H(pi), and in anchored mode (which requires
// (1,...,1,-(arity-1)) in span W):
// H >= H(mu(pi)) + (dim W - 1)/(arity-2) * (H(pi) - H(mu(pi))).
struct SubspaceEntropyResult {
  double h_joint = 0;
  double h_pi = 0;
  double h_marginal = 0;
  double rhs_plain = 0;
  double rhs_anchored = 0;
  bool ok = true;
};
SubspaceEntropyResult subspace_entropy_check(const SymmetricTensor& pi,
                                             const SubspaceSpec& W, bool anchored,
                                             double tol = 1e-9);

// Multinomial counting bounds for a composition with denominators 1/n:
// e^{Hn}/(e^{|S|} n^{|S|}) <= M <= e^{Hn}; with a classifier f and its class
// counts fixed, the constrained count satisfies M_c <= e^{(H(z)-H(f(z)))n}.
struct SequenceCountReport {
  double log_M = 0;
  double log_upper = 0;
  double log_lower = 0;
  bool ok_plain = true;
  std::optional<double> log_M_constrained;
  std::optional<double> log_upper_constrained;
  bool ok_constrained = true;
};
SequenceCountReport sequence_count_checks(const ScaledDistribution& omega, int n,
                                          const std::optional<std::vector<int>>& classifier = {},
                                          double tol = 1e-9);

// |H(w1)-H(w0)| <= ||w1-w0||_1 * ln(1/c) for distributions with entries >= c.
struct PerturbationResult {
  double lhs = 0;
  double rhs = 0;
  bool ok = true;
};
PerturbationResult perturbation_entropy_check(const ScaledDistribution& w0,
                                              const ScaledDistribution& w1, const rat& c,
                                              double tol = 1e-9);

// Census of "special pairs": zero-sum tuples xs' != xs from X_0^k sharing at
// least one position member with xs, classified by d = rank_Q{x_i - x_i'}.
// Emits counts next to exp(d*(H_tau-H_nu)/(k-2)*n) for qualitative
// comparison; the asymptotic constants are unspecified, so no verdict.
struct SpecialPairCensus {
  std::map<int, std::uint64_t> count_by_d;
  std::map<int, double> reference_by_d;
  std::uint64_t enumerated = 0;
};
SpecialPairCensus special_pair_census(const std::vector<std::vector<int>>& xs,
                                      const ScaledDistribution& nu_n, int m, int k, int n,
                                      double H_tau, double H_nu, std::uint64_t cap);

}  // namespace sumfree
