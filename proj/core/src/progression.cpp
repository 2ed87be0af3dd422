#include "sumfree/progression.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sumfree/errors.hpp"
#include "sumfree/primes.hpp"

namespace sumfree {

namespace {

using u64 = std::uint64_t;

bool in_set(const std::set<u64>& s, u64 v) { return s.count(v) != 0; }

// Advances a nondecreasing index tuple over {0,...,size-1}; false at the end.
bool next_multiset(std::vector<size_t>& idx, size_t size) {
  int pos = static_cast<int>(idx.size()) - 1;
  while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == size) --pos;
  if (pos < 0) return false;
  const size_t next = idx[static_cast<size_t>(pos)] + 1;
  for (size_t q = static_cast<size_t>(pos); q < idx.size(); ++q) idx[q] = next;
  return true;
}

// True when y_1+...+y_{k-1} = (k-1)y_k has a nonconstant solution in
// members *cand* using candidate c at least once. Enumerates the free
// positions as a multiset and resolves the last one by lookup.
bool creates_violation(const std::set<u64>& cand, u64 c, int k) {
  const std::vector<u64> all(cand.begin(), cand.end());
  const u64 km1 = static_cast<u64>(k - 1);

  // c on the right: y_1 <= ... <= y_{k-2} free, y_{k-1} resolved.
  {
    std::vector<size_t> idx(static_cast<size_t>(k - 2), 0);
    const u64 target = km1 * c;
    do {
      u64 sum = 0;
      for (size_t q : idx) sum += all[q];
      if (sum > target) continue;
      const u64 last = target - sum;
      if (!in_set(cand, last) || last < all[idx.back()]) continue;
      bool all_c = last == c;
      for (size_t q : idx) all_c = all_c && all[q] == c;
      if (!all_c) return true;
    } while (next_multiset(idx, all.size()));
  }

  // c on the left: k-2 further left values free, y_k resolved by divisibility.
  {
    std::vector<size_t> idx(static_cast<size_t>(k - 2), 0);
    do {
      u64 sum = c;
      for (size_t q : idx) sum += all[q];
      if (sum % km1 != 0) continue;
      const u64 yk = sum / km1;
      if (!in_set(cand, yk)) continue;
      bool all_c = yk == c;
      for (size_t q : idx) all_c = all_c && all[q] == c;
      if (!all_c) return true;
    } while (next_multiset(idx, all.size()));
  }
  return false;
}

std::vector<u64> greedy_set(u64 window, int k) {
  std::set<u64> chosen;
  for (u64 c = 1; c <= window; ++c) {
    chosen.insert(c);
    if (creates_violation(chosen, c, k)) chosen.erase(c);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<u64> behrend_set(u64 window, int k) {
  constexpr u64 kEnumCap = 2'000'000;
  std::vector<u64> best;
  const auto fits = [window](u64 base, int D) {
    long double p = 1;
    for (int i = 0; i < D; ++i) p *= static_cast<long double>(base);
    return p <= static_cast<long double>(window) + 1.0L;
  };
  for (int D = 1; D <= 60; ++D) {
    // Largest base with every digit vector mapping below the window.
    u64 d = static_cast<u64>(std::pow(static_cast<double>(window) + 1.0, 1.0 / D));
    while (d > 1 && !fits(d, D)) --d;
    while (fits(d + 1, D)) ++d;
    if (d < static_cast<u64>(k)) continue;  // digit cap below 2, no nonzero vectors
    const u64 dmax = (d + static_cast<u64>(k) - 2) / static_cast<u64>(k - 1);

    long double count = 1;
    for (int i = 0; i < D; ++i) count *= static_cast<long double>(dmax);
    if (count > static_cast<long double>(kEnumCap)) continue;

    std::map<u64, std::vector<u64>> shells;  // squared norm -> values
    std::vector<u64> digits(static_cast<size_t>(D), 0);
    for (;;) {
      u64 norm2 = 0;
      u64 value = 0;
      u64 place = 1;
      for (int i = 0; i < D; ++i) {
        norm2 += digits[static_cast<size_t>(i)] * digits[static_cast<size_t>(i)];
        value += digits[static_cast<size_t>(i)] * place;
        if (i + 1 < D) place *= d;
      }
      if (norm2 > 0 && value >= 1 && value <= window) shells[norm2].push_back(value);

      int pos = D - 1;
      while (pos >= 0 && digits[static_cast<size_t>(pos)] + 1 == dmax) {
        digits[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<size_t>(pos)];
    }
    for (auto& [norm2, values] : shells)
      if (values.size() > best.size()) best = std::move(values);
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

FieldSetup progression_free_set(u64 P, int k, PfsMethod method) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(P >= 2, errc::invalid_argument, "P must be >= 2");
  require(is_prime_u64(P), errc::invalid_argument, "P must be prime");

  FieldSetup fs;
  fs.P = P;
  fs.k = k;
  fs.method = method;
  const u64 window = P / static_cast<u64>(k);
  if (window >= 1)
    fs.Y = method == PfsMethod::greedy ? greedy_set(window, k) : behrend_set(window, k);
  if (fs.Y.empty()) fs.Y = {1};
  fs.R = fs.Y.size();
  return fs;
}

std::vector<PfsViolation> progression_free_violations(const std::vector<u64>& Y, int k) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  std::vector<PfsViolation> out;
  if (Y.empty()) return out;
  std::set<u64> members(Y.begin(), Y.end());
  std::vector<u64> sorted(members.begin(), members.end());
  const u64 km1 = static_cast<u64>(k - 1);

  // Nondecreasing (k-1)-tuples on the left, right side resolved by division.
  std::vector<size_t> idx(static_cast<size_t>(k - 1), 0);
  do {
    u64 sum = 0;
    for (size_t q : idx) sum += sorted[q];
    if (sum % km1 != 0) continue;
    const u64 yk = sum / km1;
    if (!in_set(members, yk)) continue;
    bool constant = true;
    for (size_t q : idx) constant = constant && sorted[q] == yk;
    if (constant) continue;
    PfsViolation v;
    for (size_t q : idx) v.ys.push_back(sorted[q]);
    v.ys.push_back(yk);
    out.push_back(std::move(v));
  } while (next_multiset(idx, sorted.size()));
  return out;
}

std::vector<std::vector<u64>> colored_line(const FieldSetup& fs) {
  require(fs.P >= 2, errc::invalid_argument, "field not initialized");
  std::vector<std::vector<u64>> line;
  line.reserve(fs.Y.size());
  for (u64 y : fs.Y) {
    std::vector<u64> tuple(static_cast<size_t>(fs.k - 1), y % fs.P);
    const u64 r = (static_cast<u64>(fs.k - 1) % fs.P) * (y % fs.P) % fs.P;
    tuple.push_back((fs.P - r) % fs.P);
    line.push_back(std::move(tuple));
  }
  return line;
}

}  // namespace sumfree
