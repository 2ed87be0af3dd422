#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/verification.hpp"

namespace sumfree {

// A named randomized/exhaustive property suite. `cases` counts individual
// checks; any violation appears in `failures` with enough detail to replay.
struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<Violation> failures;
  std::vector<std::pair<std::string, std::string>> stats;  // ordered key/value

  bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Runs one suite with its default sizing. Seeded suites derive all draws from
// `seed`; exhaustive suites ignore it.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

// Individual suites (sizes chosen to match the acceptance grid).
SuiteReport suite_sumfree_cross(std::uint64_t seed, int collections);
SuiteReport suite_bounds(int n_max, int brute_n_max);
SuiteReport suite_lucas();
SuiteReport suite_rank(std::uint64_t seed, int cases);
SuiteReport suite_subspace(std::uint64_t seed, int cases);
SuiteReport suite_slimages(std::uint64_t seed, int cases);
SuiteReport suite_seqcount(std::uint64_t seed, int cases);
SuiteReport suite_perturb(std::uint64_t seed, int cases);
SuiteReport suite_census();
SuiteReport suite_pfs(std::uint64_t prime_limit);

}  // namespace sumfree
