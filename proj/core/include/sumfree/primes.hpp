#pragma once

#include <cstdint>

namespace sumfree {

// Deterministic Miller-Rabin, valid for all 64-bit inputs
// (witness set {2,3,5,7,11,13,17,19,23,29,31,37}).
bool is_prime_u64(std::uint64_t n);

// Smallest prime >= n; n must stay below 2^63 to leave search room.
std::uint64_t next_prime(std::uint64_t n);

// (a*b) mod m and (a^e) mod m without overflow.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace sumfree
