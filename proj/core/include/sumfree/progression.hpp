#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumfree {

enum class PfsMethod { greedy, behrend };

// Prime field data for the sampling pipeline: a set Y in {1,...,floor(P/k)}
// where y_1+...+y_{k-1} = (k-1)y_k has only constant solutions, plus its
// k-colored line (y,...,y,-(k-1)y) over F_P.
struct FieldSetup {
  std::uint64_t P = 0;
  int k = 0;
  std::vector<std::uint64_t> Y;  // sorted ascending
  std::uint64_t R = 0;           // |Y|
  PfsMethod method = PfsMethod::greedy;
};

// Builds Y for prime P >= 2. For the degenerate override P < k the window
// {1,...,floor(P/k)} is empty, so Y falls back to {1}; the single line tuple
// it produces is still k-colored sum-free (checked by brute force in tests).
FieldSetup progression_free_set(std::uint64_t P, int k, PfsMethod method);

// Exhaustive nontrivial-solution search; empty result means Y qualifies.
// Cost O(|Y|^{k-2} * |Y|) with hash resolution of one variable; intended for
// P <= 5000.
struct PfsViolation {
  std::vector<std::uint64_t> ys;  // y_1..y_{k-1}, y_k with the equation holding
};
std::vector<PfsViolation> progression_free_violations(const std::vector<std::uint64_t>& Y,
                                                      int k);

// R tuples (y,...,y, -(k-1)y mod P).
std::vector<std::vector<std::uint64_t>> colored_line(const FieldSetup& fs);

}  // namespace sumfree
