#include "sumfree/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sumfree/linalg.hpp"
#include "sumfree/primes.hpp"

namespace sumfree {

namespace {

using u64 = std::uint64_t;

void validate_collection(const SumFreeCollection& c) {
  require(c.m >= 2, errc::invalid_argument, "m must be >= 2");
  require(c.k >= 3, errc::invalid_argument, "k must be >= 3");
  require(c.n >= 1, errc::invalid_argument, "n must be >= 1");
  for (const auto& tuple : c.tuples) {
    require(static_cast<int>(tuple.size()) == c.k, errc::invalid_argument,
            "tuple arity mismatch");
    for (const auto& member : tuple) {
      require(static_cast<int>(member.size()) == c.n, errc::invalid_argument,
              "member length mismatch");
      for (int a : member)
        require(a >= 0 && a < c.m, errc::invalid_argument, "member entry outside 0..m-1");
    }
  }
}

// Coordinate sums along one choice of members; diagonal target is
// (m-1)*ones in integer mode and 0 mod m in Z_m mode.
bool sums_to_target(const SumFreeCollection& c, const std::vector<size_t>& js) {
  for (int col = 0; col < c.n; ++col) {
    long long s = 0;
    for (int i = 0; i < c.k; ++i)
      s += c.tuples[js[static_cast<size_t>(i)]][static_cast<size_t>(i)]
                   [static_cast<size_t>(col)];
    if (c.mode == CollectionMode::integer_vectors) {
      if (s != c.m - 1) return false;
    } else {
      if (s % c.m != 0) return false;
    }
  }
  return true;
}

void check_diagonals(const SumFreeCollection& c, VerifyResult& res) {
  for (size_t j = 0; j < c.tuples.size(); ++j) {
    std::vector<size_t> js(static_cast<size_t>(c.k), j);
    if (sums_to_target(c, js)) continue;
    res.ok = false;
    Violation v;
    v.kind = "diagonal";
    v.indices.assign(static_cast<size_t>(c.k), static_cast<long long>(j));
    v.detail = "tuple does not sum to the target";
    res.violations.push_back(std::move(v));
  }
}

bool next_odometer(std::vector<size_t>& js, size_t bound) {
  int pos = static_cast<int>(js.size()) - 1;
  while (pos >= 0 && js[static_cast<size_t>(pos)] + 1 == bound) {
    js[static_cast<size_t>(pos)] = 0;
    --pos;
  }
  if (pos < 0) return false;
  ++js[static_cast<size_t>(pos)];
  return true;
}

}  // namespace

VerifyResult verify_sumfree_naive(const SumFreeCollection& c) {
  validate_collection(c);
  VerifyResult res;
  const size_t L = c.tuples.size();
  check_diagonals(c, res);
  if (L == 0) return res;

  std::vector<size_t> js(static_cast<size_t>(c.k), 0);
  do {
    bool diagonal = true;
    for (size_t j : js) diagonal = diagonal && j == js[0];
    if (diagonal) continue;
    if (!sums_to_target(c, js)) continue;
    res.ok = false;
    Violation v;
    v.kind = "cross";
    for (size_t j : js) v.indices.push_back(static_cast<long long>(j));
    v.detail = "off-diagonal members sum to the target";
    res.violations.push_back(std::move(v));
  } while (next_odometer(js, L));
  return res;
}

VerifyResult verify_sumfree(const SumFreeCollection& c) {
  validate_collection(c);
  const size_t L = c.tuples.size();

  std::map<std::vector<int>, size_t> last_member;
  bool duplicates = false;
  for (size_t j = 0; j < L; ++j)
    duplicates =
        !last_member.emplace(c.tuples[j][static_cast<size_t>(c.k - 1)], j).second ||
        duplicates;
  if (duplicates) {
    VerifyResult res = verify_sumfree_naive(c);
    res.used_fallback_scan = true;
    return res;
  }

  VerifyResult res;
  check_diagonals(c, res);
  if (L == 0) return res;

  std::vector<size_t> js(static_cast<size_t>(c.k - 1), 0);
  std::vector<int> needed(static_cast<size_t>(c.n), 0);
  do {
    bool resolvable = true;
    for (int col = 0; col < c.n && resolvable; ++col) {
      long long s = 0;
      for (int i = 0; i < c.k - 1; ++i)
        s += c.tuples[js[static_cast<size_t>(i)]][static_cast<size_t>(i)]
                     [static_cast<size_t>(col)];
      long long want;
      if (c.mode == CollectionMode::integer_vectors) {
        want = (c.m - 1) - s;
        if (want < 0 || want >= c.m) resolvable = false;
      } else {
        want = ((-s) % c.m + c.m) % c.m;
      }
      if (resolvable) needed[static_cast<size_t>(col)] = static_cast<int>(want);
    }
    if (!resolvable) continue;
    auto it = last_member.find(needed);
    if (it == last_member.end()) continue;
    const size_t jk = it->second;
    bool diagonal = jk == js[0];
    for (size_t j : js) diagonal = diagonal && j == js[0];
    if (diagonal) continue;
    res.ok = false;
    Violation v;
    v.kind = "cross";
    for (size_t j : js) v.indices.push_back(static_cast<long long>(j));
    v.indices.push_back(static_cast<long long>(jk));
    v.detail = "off-diagonal members sum to the target";
    res.violations.push_back(std::move(v));
  } while (next_odometer(js, L));
  return res;
}

BoundedCountResult bounded_tuple_count(int n, int m, int k) {
  require(m >= 2, errc::invalid_argument, "m must be >= 2");
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(n >= 1, errc::invalid_argument, "n must be >= 1");

  const int max_sum = n * (m - 1);
  std::vector<bigint> dp(static_cast<size_t>(max_sum) + 1, bigint(0));
  dp[0] = 1;
  for (int pos = 0; pos < n; ++pos) {
    std::vector<bigint> next(dp.size(), bigint(0));
    for (int s = 0; s <= pos * (m - 1); ++s) {
      if (dp[static_cast<size_t>(s)] == 0) continue;
      for (int a = 0; a < m; ++a) next[static_cast<size_t>(s + a)] += dp[static_cast<size_t>(s)];
    }
    dp = std::move(next);
  }

  BoundedCountResult res;
  res.exact = 0;
  for (int s = 0; s <= max_sum; ++s)
    if (static_cast<long long>(k) * s <= static_cast<long long>(max_sum))
      res.exact += dp[static_cast<size_t>(s)];

  Params p;
  p.m = m;
  p.k = k;
  p.n = n;
  CapacityResult cr = capacity(p);
  res.log_bound = n * std::log(cr.capacity);
  res.bound = std::exp(res.log_bound);
  res.log_exact = log_bigint(res.exact);
  res.ok = res.log_exact <= res.log_bound + 1e-9;
  return res;
}

namespace {

// Truncated product of the per-coordinate polynomials
// f_i(t) = sum_{a<=m-1} C(z_i,a) (-t)^a, reduced mod p; the identity's left
// side is the sum of the coefficients of degree <= m-1.
u64 lucas_lhs(const std::vector<int>& z, int m, u64 p,
              const std::vector<std::vector<u64>>& binom_mod) {
  std::vector<u64> poly(static_cast<size_t>(m), 0);
  poly[0] = 1 % p;
  std::vector<u64> next(static_cast<size_t>(m), 0);
  for (int zi : z) {
    std::fill(next.begin(), next.end(), 0);
    for (int deg = 0; deg < m; ++deg) {
      if (poly[static_cast<size_t>(deg)] == 0) continue;
      for (int a = 0; a + deg < m; ++a) {
        u64 term = mulmod_u64(poly[static_cast<size_t>(deg)],
                              binom_mod[static_cast<size_t>(zi)][static_cast<size_t>(a)], p);
        if (a % 2 == 1) term = (p - term) % p;
        next[static_cast<size_t>(deg + a)] = (next[static_cast<size_t>(deg + a)] + term) % p;
      }
    }
    poly.swap(next);
  }
  u64 total = 0;
  for (u64 coeff : poly) total = (total + coeff) % p;
  return total;
}

}  // namespace

VerifyResult lucas_identity_check(u64 p, int l, int k) {
  require(is_prime_u64(p), errc::invalid_argument, "p must be prime");
  require(l >= 1, errc::invalid_argument, "l must be >= 1");
  require(k >= 2, errc::invalid_argument, "k must be >= 2");
  u64 power = 1;
  for (int i = 0; i < l; ++i) {
    power *= p;
    require(power <= 16, errc::invalid_argument, "exhaustive check capped at modulus 16");
  }
  const int m = static_cast<int>(power);

  // C(z,a) mod p for lifts z up to 2m-1, entry a up to m-1.
  std::vector<std::vector<u64>> binom_mod(static_cast<size_t>(2 * m));
  for (int z = 0; z < 2 * m; ++z) {
    binom_mod[static_cast<size_t>(z)].resize(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
      bigint b = binomial(static_cast<unsigned long>(z), static_cast<unsigned long>(a));
      binom_mod[static_cast<size_t>(z)][static_cast<size_t>(a)] =
          mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(p));
    }
  }

  VerifyResult res;
  std::vector<size_t> zidx(static_cast<size_t>(k), 0);
  std::vector<int> z(static_cast<size_t>(k), 0);
  do {
    int sum = 0;
    for (int i = 0; i < k; ++i) {
      z[static_cast<size_t>(i)] = static_cast<int>(zidx[static_cast<size_t>(i)]);
      sum += z[static_cast<size_t>(i)];
    }
    const u64 lhs = lucas_lhs(z, m, p, binom_mod);
    const u64 rhs = sum % m == 0 ? 1 % p : 0;
    if (lhs != rhs) {
      res.ok = false;
      Violation v;
      v.kind = "identity";
      for (int zi : z) v.indices.push_back(zi);
      v.detail = "lhs " + std::to_string(lhs) + " != rhs " + std::to_string(rhs);
      res.violations.push_back(std::move(v));
    }
    // The expression must only depend on z mod m, else comparing against
    // the canonical lift would be meaningless.
    for (int i = 0; i < k; ++i) {
      std::vector<int> lifted = z;
      lifted[static_cast<size_t>(i)] += m;
      if (lucas_lhs(lifted, m, p, binom_mod) == lhs) continue;
      res.ok = false;
      Violation v;
      v.kind = "lift";
      for (int zi : z) v.indices.push_back(zi);
      v.indices.push_back(i);
      v.detail = "value changed under lift of the cited coordinate";
      res.violations.push_back(std::move(v));
    }
  } while (next_odometer(zidx, static_cast<size_t>(m)));
  return res;
}

RankCheckResult rank_lemma_check(const std::vector<std::vector<int>>& xs,
                                 const std::vector<std::vector<int>>& xs_prime, int m,
                                 u64 P) {
  const int k = static_cast<int>(xs.size());
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(xs_prime.size() == xs.size(), errc::invalid_argument, "tuple arity mismatch");
  require(!xs[0].empty(), errc::invalid_argument, "empty members");
  const int n = static_cast<int>(xs[0].size());
  require(is_prime_u64(P), errc::invalid_argument, "P must be prime");

  for (const auto* tuple : {&xs, &xs_prime})
    for (int col = 0; col < n; ++col) {
      long long s = 0;
      for (const auto& member : *tuple) {
        require(static_cast<int>(member.size()) == n, errc::invalid_argument,
                "member length mismatch");
        s += member[static_cast<size_t>(col)];
      }
      require(s == m - 1, errc::invalid_argument, "tuple is not zero-sum normalized");
    }

  RankCheckResult res;
  std::vector<std::vector<bigint>> diffs;
  for (int i = 0; i < k; ++i) {
    std::vector<bigint> row;
    row.reserve(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col)
      row.emplace_back(xs[static_cast<size_t>(i)][static_cast<size_t>(col)] -
                       xs_prime[static_cast<size_t>(i)][static_cast<size_t>(col)]);
    diffs.push_back(std::move(row));
  }
  res.d = rank_q(std::move(diffs));

  std::vector<std::vector<u64>> rows;
  for (const auto* tuple : {&xs, &xs_prime})
    for (int i = 0; i < k; ++i) {
      std::vector<long long> v = lift((*tuple)[static_cast<size_t>(i)], i + 1, m, k);
      std::vector<u64> row;
      row.reserve(v.size());
      const long long pp = static_cast<long long>(P);
      for (long long x : v) row.push_back(static_cast<u64>(((x % pp) + pp) % pp));
      rows.push_back(std::move(row));
    }
  res.rank_p = rank_mod_p(std::move(rows), P);

  bigint threshold;
  mpz_fac_ui(threshold.get_mpz_t(), static_cast<unsigned long>(2 * k));
  bigint mk;
  mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(2 * k));
  threshold *= mk;
  res.p_large_enough = bigint(static_cast<unsigned long>(P)) > threshold;
  res.ok = !res.p_large_enough || res.rank_p == k - 1 + res.d;
  return res;
}

SubspaceEntropyResult subspace_entropy_check(const SymmetricTensor& pi,
                                             const SubspaceSpec& W, bool anchored,
                                             double tol) {
  pi.validate();
  require(pi.total() == 1, errc::invalid_argument, "tensor must be normalized");
  const int l = pi.arity;
  require(l >= 3, errc::invalid_argument, "arity must be >= 3");
  require(W.arity == l, errc::invalid_argument, "subspace arity mismatch");
  const int dim = W.dim();
  require(dim >= 1 && dim <= l - 1, errc::invalid_argument,
          "subspace dimension outside 1..arity-1");
  for (const auto& w : W.basis) {
    require(static_cast<int>(w.size()) == l, errc::invalid_argument,
            "basis vector length mismatch");
    rat s(0);
    for (const rat& e : w) s += e;
    require(sgn(s) == 0, errc::invalid_argument, "basis vector does not sum to zero");
  }
  require(rank_q_rational(W.basis) == dim, errc::invalid_argument,
          "basis is not linearly independent");
  if (anchored) {
    std::vector<std::vector<rat>> with_anchor = W.basis;
    std::vector<rat> anchor(static_cast<size_t>(l), rat(1));
    anchor.back() = rat(-(l - 1));
    with_anchor.push_back(std::move(anchor));
    require(rank_q_rational(with_anchor) == dim, errc::invalid_argument,
            "anchored mode requires (1,...,1,-(arity-1)) in the span");
  }

  CompositionTable table = enumerate_compositions(pi.r, l);
  std::map<std::vector<rat>, rat> groups;
  for (const auto& t : table.elements) {
    auto it = pi.weight.find(orbit_rep(t));
    const rat w = it == pi.weight.end() ? rat(0) : it->second;
    if (sgn(w) == 0) continue;
    std::vector<rat> key;
    key.reserve(W.basis.size());
    for (const auto& bv : W.basis) {
      rat v(0);
      for (int c = 0; c < l; ++c) v += bv[static_cast<size_t>(c)] * rat(t[static_cast<size_t>(c)]);
      key.push_back(v);
    }
    groups[key] += w;
  }

  SubspaceEntropyResult res;
  for (const auto& [key, mass] : groups) {
    const double md = to_double(mass);
    if (md > 0) res.h_joint -= md * std::log(md);
  }
  res.h_pi = entropy(pi);
  res.h_marginal = entropy(marginal(pi));
  res.rhs_plain = static_cast<double>(dim) / (l - 1) * res.h_pi;
  res.ok = res.h_joint + tol >= res.rhs_plain;
  if (anchored) {
    res.rhs_anchored =
        res.h_marginal + static_cast<double>(dim - 1) / (l - 2) * (res.h_pi - res.h_marginal);
    res.ok = res.ok && res.h_joint + tol >= res.rhs_anchored;
  }
  return res;
}

SequenceCountReport sequence_count_checks(const ScaledDistribution& omega, int n,
                                          const std::optional<std::vector<int>>& classifier,
                                          double tol) {
  require(n >= 1, errc::invalid_argument, "n must be >= 1");
  omega.validate_nonnegative();
  require(omega.total() == 1, errc::invalid_argument, "composition must be normalized");

  std::vector<unsigned long> counts;
  int support = 0;
  for (int s = 0; s <= omega.support_max(); ++s) {
    rat c = omega[s] * rat(n);
    require(c.get_den() == 1, errc::invalid_argument,
            "entry " + std::to_string(s) + " times n is not a whole count");
    counts.push_back(static_cast<unsigned long>(c.get_num().get_ui()));
    if (counts.back() > 0) ++support;
  }

  SequenceCountReport rep;
  const bigint M = multinomial(static_cast<unsigned long>(n), counts);
  rep.log_M = log_bigint(M);
  const double H = entropy(omega);
  rep.log_upper = H * n;
  rep.log_lower = H * n - support - support * std::log(static_cast<double>(n));
  rep.ok_plain = rep.log_M <= rep.log_upper + tol && rep.log_M >= rep.log_lower - tol;

  if (classifier) {
    require(classifier->size() == omega.weights.size(), errc::invalid_argument,
            "classifier length mismatch");
    std::map<int, std::vector<unsigned long>> classes;
    std::map<int, unsigned long> class_totals;
    for (size_t s = 0; s < counts.size(); ++s) {
      classes[(*classifier)[s]].push_back(counts[s]);
      class_totals[(*classifier)[s]] += counts[s];
    }
    bigint constrained(1);
    std::vector<rat> class_masses;
    for (const auto& [cls, parts] : classes) {
      constrained *= multinomial(class_totals[cls], parts);
      class_masses.push_back(make_rat(static_cast<long>(class_totals[cls]), n));
    }
    rep.log_M_constrained = log_bigint(constrained);
    const double Hf = entropy_masses(class_masses);
    rep.log_upper_constrained = (H - Hf) * n;
    rep.ok_constrained = *rep.log_M_constrained <= *rep.log_upper_constrained + tol;
  }
  return rep;
}

PerturbationResult perturbation_entropy_check(const ScaledDistribution& w0,
                                              const ScaledDistribution& w1, const rat& c,
                                              double tol) {
  require(sgn(c) > 0, errc::invalid_argument, "floor must be positive");
  require(w0.support_max() == w1.support_max(), errc::invalid_argument,
          "support mismatch");
  require(w0.total() == 1 && w1.total() == 1, errc::invalid_argument,
          "distributions must be normalized");
  for (int i = 0; i <= w0.support_max(); ++i)
    require(w0[i] >= c && w1[i] >= c, errc::invalid_argument,
            "entry below the floor at index " + std::to_string(i));

  PerturbationResult res;
  res.lhs = std::fabs(entropy(w1) - entropy(w0));
  rat l1(0);
  for (int i = 0; i <= w0.support_max(); ++i) l1 += abs(rat(w1[i] - w0[i]));
  res.rhs = to_double(l1) * -std::log(to_double(c));
  res.ok = res.lhs <= res.rhs + tol;
  return res;
}

SpecialPairCensus special_pair_census(const std::vector<std::vector<int>>& xs,
                                      const ScaledDistribution& nu_n, int m, int k, int n,
                                      double H_tau, double H_nu, std::uint64_t cap) {
  require(static_cast<int>(xs.size()) == k, errc::invalid_argument, "tuple arity mismatch");
  for (const auto& member : xs)
    require(static_cast<int>(member.size()) == n, errc::invalid_argument,
            "member length mismatch");
  for (int col = 0; col < n; ++col) {
    long long s = 0;
    for (const auto& member : xs) s += member[static_cast<size_t>(col)];
    require(s == m - 1, errc::invalid_argument, "tuple is not zero-sum normalized");
  }

  std::vector<std::vector<int>> X0 = enumerate_X0(nu_n, m, n, cap);

  SpecialPairCensus census;
  for (int d = 1; d <= k - 2; ++d)
    census.reference_by_d[d] = std::exp(d * (H_tau - H_nu) / (k - 2) * n);

  u64 work = 0;
  std::vector<size_t> pick(static_cast<size_t>(k - 1), 0);
  std::vector<int> running(static_cast<size_t>(n), 0);
  std::vector<int> resolved(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> candidate(static_cast<size_t>(k));

  const auto classify = [&]() {
    bool shares = false;
    bool equal = true;
    for (int i = 0; i < k; ++i) {
      const bool same = candidate[static_cast<size_t>(i)] == xs[static_cast<size_t>(i)];
      shares = shares || same;
      equal = equal && same;
    }
    if (!shares || equal) return;
    std::vector<std::vector<bigint>> diffs;
    for (int i = 0; i < k; ++i) {
      std::vector<bigint> row;
      for (int col = 0; col < n; ++col)
        row.emplace_back(xs[static_cast<size_t>(i)][static_cast<size_t>(col)] -
                         candidate[static_cast<size_t>(i)][static_cast<size_t>(col)]);
      diffs.push_back(std::move(row));
    }
    ++census.count_by_d[rank_q(std::move(diffs))];
  };

  const auto search = [&](auto&& self, int depth) -> void {
    require(++work <= cap, errc::resource_cap, "pair census exceeded the work cap");
    if (depth == k - 1) {
      for (int col = 0; col < n; ++col) {
        resolved[static_cast<size_t>(col)] = (m - 1) - running[static_cast<size_t>(col)];
        if (resolved[static_cast<size_t>(col)] < 0 ||
            resolved[static_cast<size_t>(col)] > m - 1)
          return;
      }
      if (!std::binary_search(X0.begin(), X0.end(), resolved)) return;
      ++census.enumerated;
      for (int i = 0; i < k - 1; ++i)
        candidate[static_cast<size_t>(i)] = X0[pick[static_cast<size_t>(i)]];
      candidate[static_cast<size_t>(k - 1)] = resolved;
      classify();
      return;
    }
    for (size_t idx = 0; idx < X0.size(); ++idx) {
      const std::vector<int>& x = X0[idx];
      bool ok = true;
      for (int col = 0; col < n && ok; ++col)
        ok = running[static_cast<size_t>(col)] + x[static_cast<size_t>(col)] <= m - 1;
      if (!ok) continue;
      for (int col = 0; col < n; ++col) running[static_cast<size_t>(col)] += x[static_cast<size_t>(col)];
      pick[static_cast<size_t>(depth)] = idx;
      self(self, depth + 1);
      for (int col = 0; col < n; ++col) running[static_cast<size_t>(col)] -= x[static_cast<size_t>(col)];
    }
  };
  search(search, 0);
  return census;
}

}  // namespace sumfree
