#pragma once

#include <optional>
#include <string>

#include "sumfree/compositions.hpp"

namespace sumfree {

// Denominator-n rounding of a normalized symmetric tensor on T_{m-1,k}.
// Every non-extreme entry is tau rounded down to a multiple of k/n; the k
// permutations of (m-1,0,...,0) absorb the residual mass in equal shares.
// All entries of tau_tilde and of its marginal nu_n are exact multiples of
// 1/n, total mass is exactly 1, and max|tau_tilde - tau| <= m^k/n.
struct RoundedPair {
  int m = 0;
  int k = 0;
  int n = 0;
  SymmetricTensor tau_tilde;
  ScaledDistribution nu_n;
  rat linf_gap;
  bool has_zero_entry = false;  // possible at small n; downstream warns and proceeds
};

RoundedPair round_tau(const SymmetricTensor& tau, int n);

// Empirical entropy-gap report: compares H(tau_tilde) against the max-entropy
// tensor with the same marginal. The gap scales like (log n)/n with an
// unspecified constant, so the report carries data, not a verdict.
struct EntropyGapReport {
  double h_tau_tilde = 0;
  double h_maxent = 0;
  double gap = 0;               // h_maxent - h_tau_tilde
  double implied_constant = 0;  // gap * n / ln(n)
};

EntropyGapReport entropy_gap_report(const RoundedPair& pair, int k, double tol = 1e-9);

}  // namespace sumfree
