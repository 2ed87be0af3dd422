#include "sumfree/construction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sumfree/compositions.hpp"
#include "sumfree/decomposition.hpp"
#include "sumfree/primes.hpp"

namespace sumfree {

namespace {

using u64 = std::uint64_t;

}  // namespace

u64 choose_prime(double H_tau, double H_nu, int n, int k,
                 std::optional<u64> override_prime) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(n >= 1, errc::invalid_argument, "n must be >= 1");
  if (override_prime) {
    require(is_prime_u64(*override_prime), errc::invalid_argument,
            "prime override is not prime");
    return *override_prime;
  }
  require(H_tau >= H_nu, errc::invalid_argument, "entropy gap must be nonnegative");
  const double target = std::exp((H_tau - H_nu) / (k - 2) * n);
  require(target <= std::ldexp(1.0, 62), errc::resource_cap,
          "required prime exceeds 2^62");
  u64 floor_target = target < 2 ? 2 : static_cast<u64>(std::ceil(target));
  return next_prime(floor_target);
}

std::vector<std::vector<int>> enumerate_X0(const ScaledDistribution& nu_n, int m, int n,
                                           u64 cap) {
  require(m >= 2, errc::invalid_argument, "m must be >= 2");
  require(n >= 1, errc::invalid_argument, "n must be >= 1");
  require(nu_n.support_max() == m - 1, errc::invalid_argument,
          "marginal support must be 0..m-1");
  require(nu_n.total() == 1, errc::invalid_argument, "marginal must be normalized");

  std::vector<unsigned long> counts(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    rat c = nu_n[i] * rat(n);
    require(c.get_den() == 1 && sgn(c) >= 0, errc::invalid_argument,
            "marginal entry " + std::to_string(i) + " times n is not a whole count");
    counts[static_cast<size_t>(i)] = static_cast<unsigned long>(c.get_num().get_ui());
  }

  bigint total = multinomial(static_cast<unsigned long>(n), counts);
  require(total <= bigint(static_cast<unsigned long>(cap)), errc::resource_cap,
          "frequency class size exceeds cap");

  std::vector<int> base;
  base.reserve(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i)
    base.insert(base.end(), counts[static_cast<size_t>(i)], i);

  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(total.get_ui()));
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<long long> lift(const std::vector<int>& x, int i, int m, int k) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(i >= 1 && i <= k, errc::invalid_argument, "lift position outside 1..k");
  std::vector<long long> v;
  v.reserve(x.size() + static_cast<size_t>(k - 1));
  if (i < k) {
    for (int a : x) v.push_back(a);
    for (int j = 1; j <= k - 1; ++j) v.push_back(j == i ? 1 : 0);
  } else {
    for (int a : x) v.push_back(static_cast<long long>(a) - (m - 1));
    v.insert(v.end(), static_cast<size_t>(k - 1), -1);
  }
  return v;
}

u64 LinearMap::operator()(const std::vector<long long>& v) const {
  require(v.size() == coeffs.size(), errc::invalid_argument, "linear map dimension mismatch");
  u64 acc = 0;
  const long long p = static_cast<long long>(P);
  for (size_t j = 0; j < v.size(); ++j) {
    const u64 vj = static_cast<u64>(((v[j] % p) + p) % p);
    acc = (acc + mulmod_u64(coeffs[j], vj, P)) % P;
  }
  return acc;
}

LinearMap sample_linear_map(u64 seed, u64 P, int dim) {
  require(P >= 2, errc::invalid_argument, "P must be >= 2");
  require(dim >= 1, errc::invalid_argument, "dimension must be >= 1");
  LinearMap f;
  f.P = P;
  f.seed = seed;
  CounterRng rng(seed);
  f.coeffs.reserve(static_cast<size_t>(dim));
  for (int j = 0; j < dim; ++j) f.coeffs.push_back(rng.next_below(P));
  return f;
}

SumFreeCollection project_to_zm(const SumFreeCollection& c) {
  require(c.mode == CollectionMode::integer_vectors, errc::invalid_argument,
          "projection expects the integer view");
  SumFreeCollection out = c;
  out.mode = CollectionMode::zm;
  for (auto& tuple : out.tuples) {
    require(static_cast<int>(tuple.size()) == c.k, errc::invalid_argument,
            "tuple arity mismatch");
    for (int i = 0; i < c.k; ++i)
      for (int& a : tuple[static_cast<size_t>(i)]) {
        if (i == c.k - 1) a -= c.m - 1;
        a = ((a % c.m) + c.m) % c.m;
      }
  }
  return out;
}

ConstructResult construct(int m, int k, int n, u64 seed, const ConstructOptions& options) {
  Params p;
  p.m = m;
  p.k = k;
  p.n = n;
  p.tol = options.tol;
  p.validate();
  require(n >= 1 && n % k == 0, errc::invalid_argument, "n must be a positive multiple of k");

  ConstructResult res;

  ScaledDistribution nu_m = nu(p);
  SymmetricTensor tau = symmetric_marginal_tensor(nu_m, k, options.tol);
  RoundedPair rounded = round_tau(tau, n);
  if (rounded.has_zero_entry)
    res.warnings.push_back("rounded tensor has zero entries; sampling proceeds");

  res.H_tau_tilde = entropy(rounded.tau_tilde);
  res.H_nu_n = entropy(rounded.nu_n);

  const u64 P = choose_prime(res.H_tau_tilde, res.H_nu_n, n, k, options.prime_override);
  PfsMethod method = options.pfs_method
                         ? *options.pfs_method
                         : (P / static_cast<u64>(k) <= 5000 ? PfsMethod::greedy
                                                            : PfsMethod::behrend);
  res.field = progression_free_set(P, k, method);
  const auto line = colored_line(res.field);

  LinearMap f = sample_linear_map(seed, P, n + k - 1);

  std::vector<std::vector<int>> X0 = enumerate_X0(rounded.nu_n, m, n, options.x0_cap);
  res.x0_size = X0.size();

  // Per-color f-images of the line tuples.
  std::vector<std::set<u64>> color_values(static_cast<size_t>(k));
  for (const auto& t : line)
    for (int i = 0; i < k; ++i) color_values[static_cast<size_t>(i)].insert(t[static_cast<size_t>(i)]);

  // X_i: members of X0 whose lifted f-value carries color i.
  std::vector<std::vector<size_t>> X(static_cast<size_t>(k));
  for (size_t xi = 0; xi < X0.size(); ++xi)
    for (int i = 1; i <= k; ++i) {
      const u64 value = f(lift(X0[xi], i, m, k));
      if (color_values[static_cast<size_t>(i - 1)].count(value) != 0)
        X[static_cast<size_t>(i - 1)].push_back(xi);
    }

  // Zero-sum candidates: x_1+...+x_{k-1}+x_k = (m-1)*ones, with the last
  // member resolved against X_k (X0 is lexicographic, so X_k is too).
  std::vector<std::vector<size_t>> candidates;
  const auto& Xk = X[static_cast<size_t>(k - 1)];
  std::vector<size_t> pick(static_cast<size_t>(k - 1), 0);
  std::vector<int> running(static_cast<size_t>(n), 0);
  std::vector<int> resolved(static_cast<size_t>(n), 0);

  const auto sum_ok = [&](const std::vector<int>& x) {
    for (int c = 0; c < n; ++c)
      if (running[static_cast<size_t>(c)] + x[static_cast<size_t>(c)] > m - 1) return false;
    return true;
  };

  const auto search = [&](auto&& self, int depth) -> void {
    if (depth == k - 1) {
      for (int c = 0; c < n; ++c)
        resolved[static_cast<size_t>(c)] = (m - 1) - running[static_cast<size_t>(c)];
      auto it = std::lower_bound(
          Xk.begin(), Xk.end(), resolved,
          [&](size_t idx, const std::vector<int>& v) { return X0[idx] < v; });
      if (it == Xk.end() || X0[*it] != resolved) return;
      std::vector<size_t> cand(pick.begin(), pick.begin() + (k - 1));
      cand.push_back(*it);
      candidates.push_back(std::move(cand));
      return;
    }
    for (size_t idx : X[static_cast<size_t>(depth)]) {
      const std::vector<int>& x = X0[idx];
      if (!sum_ok(x)) continue;
      for (int c = 0; c < n; ++c) running[static_cast<size_t>(c)] += x[static_cast<size_t>(c)];
      pick[static_cast<size_t>(depth)] = idx;
      self(self, depth + 1);
      for (int c = 0; c < n; ++c) running[static_cast<size_t>(c)] -= x[static_cast<size_t>(c)];
    }
  };
  search(search, 0);
  res.candidate_count = candidates.size();

  // Keep tuples whose members appear exactly once in their position.
  std::vector<std::map<size_t, int>> occurrences(static_cast<size_t>(k));
  for (const auto& cand : candidates)
    for (int i = 0; i < k; ++i) ++occurrences[static_cast<size_t>(i)][cand[static_cast<size_t>(i)]];

  SumFreeCollection ints;
  ints.mode = CollectionMode::integer_vectors;
  ints.m = m;
  ints.k = k;
  ints.n = n;
  ints.seed = seed;
  ints.P = P;
  for (const auto& cand : candidates) {
    bool isolated = true;
    for (int i = 0; i < k; ++i)
      isolated = isolated && occurrences[static_cast<size_t>(i)][cand[static_cast<size_t>(i)]] == 1;
    if (!isolated) continue;
    std::vector<std::vector<int>> tuple;
    tuple.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) tuple.push_back(X0[cand[static_cast<size_t>(i)]]);
    ints.tuples.push_back(std::move(tuple));
  }
  res.isolated_count = ints.tuples.size();

  res.zm_view = project_to_zm(ints);
  res.integer_view = std::move(ints);
  return res;
}

}  // namespace sumfree
