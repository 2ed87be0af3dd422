#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "sumfree/errors.hpp"

namespace sumfree {

// Exact rational scalar used by all decomposition algebra. The algorithms
// here are pivot-like and drift under floating point, so every quantity that
// feeds a comparison is kept as an mpq_class; doubles appear only at the
// entropy/report boundary.
using rat = mpq_class;
using bigint = mpz_class;

inline rat make_rat(long num, long den = 1) {
  require(den != 0, errc::invalid_argument, "rational with zero denominator");
  rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q", "p", or a decimal literal like "0.35" (exact).
rat parse_rat(const std::string& s);

std::string rat_str(const rat& q);

inline double to_double(const rat& q) { return q.get_d(); }

// Largest multiple of step that is <= x; step > 0.
rat floor_to_multiple(const rat& x, const rat& step);

inline bigint binomial(unsigned long n, unsigned long k) {
  bigint b;
  if (k > n) return bigint(0);
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// n! / prod(parts_i!) for parts summing to n.
bigint multinomial(unsigned long n, const std::vector<unsigned long>& parts);

// Natural log of a positive big integer, accurate to ~1e-15 relative.
double log_bigint(const bigint& v);

// -sum p_i ln p_i over positive entries of a mass vector summing to 1.
double entropy_masses(const std::vector<rat>& masses);

}  // namespace sumfree
