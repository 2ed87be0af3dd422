#pragma once

#include <cstdint>
#include <vector>

#include "sumfree/rational.hpp"

namespace sumfree {

// Rank over Q of an integer matrix (rows x cols), by fraction-free
// Bareiss elimination: intermediate values stay integral and exact.
int rank_q(std::vector<std::vector<bigint>> mat);

// Clears denominators row by row (row spans are unchanged) and delegates.
int rank_q_rational(const std::vector<std::vector<rat>>& mat);

// Rank over F_p, p prime, by Gaussian elimination on 64-bit residues.
int rank_mod_p(std::vector<std::vector<std::uint64_t>> mat, std::uint64_t p);

}  // namespace sumfree
