#include "sumfree/rational.hpp"

#include <algorithm>
#include <cctype>

namespace sumfree {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

rat parse_rat(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require(!s.empty(), errc::invalid_argument, "empty rational literal");

  std::string sign;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') sign = "-";
    s.erase(0, 1);
  }

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    require(all_digits(num) && all_digits(den), errc::invalid_argument,
            "malformed rational literal: " + input);
    // explicit base 10: the default base-0 constructor reads leading zeros as octal
    bigint n(sign + num, 10), d(den, 10);
    require(d != 0, errc::invalid_argument, "rational with zero denominator: " + input);
    rat q(n, d);
    q.canonicalize();
    return q;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    require((whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac)) &&
                !(whole.empty() && frac.empty()),
            errc::invalid_argument, "malformed decimal literal: " + input);
    bigint n(sign + (whole.empty() ? "0" : whole) + frac, 10);
    bigint d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    rat q(n, d);
    q.canonicalize();
    return q;
  }

  require(all_digits(s), errc::invalid_argument, "malformed integer literal: " + input);
  return rat(bigint(sign + s, 10));
}

std::string rat_str(const rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

rat floor_to_multiple(const rat& x, const rat& step) {
  require(sgn(step) > 0, errc::invalid_argument, "step must be positive");
  rat ratio = x / step;
  bigint fl;
  mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  return rat(fl) * step;
}

bigint multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  require(sum == n, errc::invalid_argument, "multinomial parts must sum to n");
  bigint result(1);
  unsigned long remaining = n;
  for (unsigned long p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

double log_bigint(const bigint& v) {
  require(v > 0, errc::invalid_argument, "log of non-positive integer");
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

double entropy_masses(const std::vector<rat>& masses) {
  rat total(0);
  double h = 0;
  for (const rat& p : masses) {
    require(sgn(p) >= 0, errc::invalid_argument, "entropy of a negative mass");
    total += p;
    if (sgn(p) > 0) {
      double pd = p.get_d();
      h -= pd * std::log(pd);
    }
  }
  require(total == 1, errc::invalid_argument, "entropy requires total mass 1");
  return h;
}

}  // namespace sumfree
