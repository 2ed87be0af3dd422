#include "sumfree/suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "sumfree/linalg.hpp"
#include "sumfree/primes.hpp"
#include "sumfree/rng.hpp"

namespace sumfree {

namespace {

using u64 = std::uint64_t;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void add_failure(SuiteReport& rep, std::string kind, std::vector<long long> indices,
                 std::string detail) {
  Violation v;
  v.kind = std::move(kind);
  v.indices = std::move(indices);
  v.detail = std::move(detail);
  rep.failures.push_back(std::move(v));
}

bool same_verdict(const VerifyResult& a, const VerifyResult& b) {
  if (a.ok != b.ok) return false;
  auto key = [](const VerifyResult& r) {
    std::vector<std::pair<std::string, std::vector<long long>>> ks;
    ks.reserve(r.violations.size());
    for (const auto& v : r.violations) ks.emplace_back(v.kind, v.indices);
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return key(a) == key(b);
}

void cross_check(SuiteReport& rep, const SumFreeCollection& c, long long tag) {
  ++rep.cases;
  VerifyResult fast = verify_sumfree(c);
  VerifyResult naive = verify_sumfree_naive(c);
  if (!same_verdict(fast, naive))
    add_failure(rep, "cross_oracle_mismatch", {tag},
                "lookup and naive scans disagree on this collection");
}

// Zero-sum k-tuple over {0,...,m-1}^n, coordinate sums all m-1. Positions in
// `shared` copy the reference tuple; the rest absorb the residual.
std::vector<std::vector<int>> random_zero_sum_tuple(CounterRng& rng, int m, int k, int n,
                                                    const std::vector<std::vector<int>>* ref,
                                                    const std::set<int>& shared) {
  std::vector<std::vector<int>> xs(static_cast<size_t>(k),
                                   std::vector<int>(static_cast<size_t>(n), 0));
  for (int col = 0; col < n; ++col) {
    int remaining = m - 1;
    for (int i : shared) {
      xs[static_cast<size_t>(i)][static_cast<size_t>(col)] =
          (*ref)[static_cast<size_t>(i)][static_cast<size_t>(col)];
      remaining -= xs[static_cast<size_t>(i)][static_cast<size_t>(col)];
    }
    require(remaining >= 0, errc::internal, "shared positions overflow the column sum");
    int last_free = -1;
    for (int i = k - 1; i >= 0; --i)
      if (shared.count(i) == 0) {
        last_free = i;
        break;
      }
    for (int i = 0; i < k; ++i) {
      if (shared.count(i) != 0 || i == last_free) continue;
      const int a = static_cast<int>(rng.next_below(static_cast<u64>(remaining) + 1));
      xs[static_cast<size_t>(i)][static_cast<size_t>(col)] = a;
      remaining -= a;
    }
    if (last_free >= 0) xs[static_cast<size_t>(last_free)][static_cast<size_t>(col)] = remaining;
  }
  return xs;
}

SymmetricTensor random_tensor(CounterRng& rng, int r, int arity) {
  CompositionTable table = enumerate_compositions(r, arity);
  std::set<std::vector<int>> reps;
  for (const auto& t : table.elements) reps.insert(orbit_rep(t));
  SymmetricTensor pi;
  pi.r = r;
  pi.arity = arity;
  rat total(0);
  for (const auto& rep : reps) {
    const rat draw(static_cast<long>(1 + rng.next_below(16)));
    pi.weight[rep] = draw;
    total += rat(bigint(orbit_size(rep))) * draw;
  }
  for (auto& [rep, w] : pi.weight) w /= total;
  return pi;
}

std::vector<rat> random_zero_sum_vector(CounterRng& rng, int l) {
  std::vector<rat> v(static_cast<size_t>(l), rat(0));
  rat sum(0);
  for (int i = 0; i + 1 < l; ++i) {
    const long e = static_cast<long>(rng.next_below(7)) - 3;
    v[static_cast<size_t>(i)] = rat(e);
    sum += v[static_cast<size_t>(i)];
  }
  v[static_cast<size_t>(l - 1)] = -sum;
  return v;
}

}  // namespace

SuiteReport suite_sumfree_cross(u64 seed, int collections) {
  SuiteReport rep;
  rep.suite = "sumfree_cross";
  CounterRng root(seed);
  u64 total_size = 0;
  for (int t = 0; t < collections; ++t) {
    CounterRng stream = root.split(static_cast<u64>(t));
    ConstructResult r = construct(2, 3, 6, stream.next_u64());
    total_size += r.integer_view.size();
    cross_check(rep, r.integer_view, t * 10 + 0);
    cross_check(rep, r.zm_view, t * 10 + 1);
    if (r.integer_view.size() >= 1 && r.integer_view.size() <= 30) {
      SumFreeCollection corrupted = r.integer_view;
      int& cell = corrupted.tuples[0][0][0];
      cell = (cell + 1) % corrupted.m;
      cross_check(rep, corrupted, t * 10 + 2);

      SumFreeCollection duplicated = r.integer_view;
      duplicated.tuples.push_back(duplicated.tuples[0]);
      cross_check(rep, duplicated, t * 10 + 3);
      if (!verify_sumfree(duplicated).used_fallback_scan)
        add_failure(rep, "fallback_not_taken", {t},
                    "duplicate final members should force the naive scan");
      else
        ++rep.cases;
    }
  }
  rep.stats.emplace_back("total_tuples", std::to_string(total_size));
  return rep;
}

SuiteReport suite_bounds(int n_max, int brute_n_max) {
  SuiteReport rep;
  rep.suite = "bounds";
  double min_slack = 1e300;
  for (int m = 2; m <= 5; ++m)
    for (int k = 3; k <= 5; ++k)
      for (int n = 1; n <= n_max; ++n) {
        ++rep.cases;
        BoundedCountResult res = bounded_tuple_count(n, m, k);
        min_slack = std::min(min_slack, res.log_bound - res.log_exact);
        if (!res.ok)
          add_failure(rep, "count_bound", {n, m, k},
                      "log count " + fmt_double(res.log_exact) + " exceeds log bound " +
                          fmt_double(res.log_bound));
        if (n > brute_n_max) continue;
        ++rep.cases;
        bigint brute(0);
        std::vector<int> a(static_cast<size_t>(n), 0);
        for (;;) {
          long long s = 0;
          for (int e : a) s += e;
          if (static_cast<long long>(k) * s <= static_cast<long long>(n) * (m - 1)) ++brute;
          int pos = n - 1;
          while (pos >= 0 && a[static_cast<size_t>(pos)] + 1 == m) {
            a[static_cast<size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++a[static_cast<size_t>(pos)];
        }
        if (brute != res.exact)
          add_failure(rep, "count_mismatch", {n, m, k},
                      "dp count " + res.exact.get_str() + " != brute count " + brute.get_str());
      }
  rep.stats.emplace_back("min_log_slack", fmt_double(min_slack));
  return rep;
}

SuiteReport suite_lucas() {
  SuiteReport rep;
  rep.suite = "lucas";
  const std::vector<std::pair<u64, int>> moduli = {{2, 1}, {3, 1}, {2, 2},
                                                   {5, 1}, {2, 3}, {3, 2}};
  for (const auto& [p, l] : moduli)
    for (int k = 3; k <= 4; ++k) {
      u64 m = 1;
      for (int i = 0; i < l; ++i) m *= p;
      u64 count = 1;
      for (int i = 0; i < k; ++i) count *= m;
      rep.cases += count;
      VerifyResult res = lucas_identity_check(p, l, k);
      for (auto& v : res.violations) {
        v.detail += " (p=" + std::to_string(p) + ", l=" + std::to_string(l) +
                    ", k=" + std::to_string(k) + ")";
        rep.failures.push_back(std::move(v));
      }
    }
  return rep;
}

SuiteReport suite_rank(u64 seed, int cases) {
  SuiteReport rep;
  rep.suite = "rank";
  CounterRng root(seed);
  for (int t = 0; t < cases; ++t) {
    CounterRng rng = root.split(static_cast<u64>(t));
    const int m = 2 + static_cast<int>(rng.next_below(2));
    const int k = 3;
    const int n = 3 * (1 + static_cast<int>(rng.next_below(3)));

    bigint threshold;
    mpz_fac_ui(threshold.get_mpz_t(), static_cast<unsigned long>(2 * k));
    bigint mk;
    mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(2 * k));
    threshold *= mk;
    const u64 P = next_prime(threshold.get_ui() + 1);

    std::set<int> none;
    std::vector<std::vector<int>> xs = random_zero_sum_tuple(rng, m, k, n, nullptr, none);
    std::set<int> shared;
    for (int i = 0; i < k; ++i)
      if (rng.next_below(3) == 0) shared.insert(i);
    std::vector<std::vector<int>> xs_prime = random_zero_sum_tuple(rng, m, k, n, &xs, shared);

    ++rep.cases;
    RankCheckResult res = rank_lemma_check(xs, xs_prime, m, P);
    if (!res.p_large_enough)
      add_failure(rep, "rank_flag", {t}, "chosen prime failed to arm the comparison");
    else if (!res.ok)
      add_failure(rep, "rank_mismatch", {t},
                  "rank over F_P " + std::to_string(res.rank_p) + " != k-1+d with d = " +
                      std::to_string(res.d));
  }
  return rep;
}

SuiteReport suite_subspace(u64 seed, int cases) {
  SuiteReport rep;
  rep.suite = "subspace";
  CounterRng root(seed);
  for (int t = 0; t < cases; ++t) {
    CounterRng rng = root.split(static_cast<u64>(t));
    const int l = 3 + static_cast<int>(rng.next_below(2));
    const int r = 1 + static_cast<int>(rng.next_below(4));
    const bool anchored = rng.next_below(2) == 0;
    SymmetricTensor pi = random_tensor(rng, r, l);

    SubspaceSpec W;
    W.arity = l;
    const int want = 1 + static_cast<int>(rng.next_below(static_cast<u64>(l - 1)));
    for (int attempt = 0; attempt < 100 && W.dim() < want; ++attempt) {
      W.basis.clear();
      if (anchored) {
        std::vector<rat> anchor(static_cast<size_t>(l), rat(1));
        anchor.back() = rat(-(l - 1));
        W.basis.push_back(std::move(anchor));
      }
      while (W.dim() < want) W.basis.push_back(random_zero_sum_vector(rng, l));
      if (rank_q_rational(W.basis) != want) W.basis.clear();
    }
    if (W.dim() != want) {
      // Deterministic fallback: difference vectors always work.
      W.basis.clear();
      if (anchored) {
        std::vector<rat> anchor(static_cast<size_t>(l), rat(1));
        anchor.back() = rat(-(l - 1));
        W.basis.push_back(std::move(anchor));
      }
      for (int j = 0; W.dim() < want; ++j) {
        std::vector<rat> v(static_cast<size_t>(l), rat(0));
        v[static_cast<size_t>(j)] = rat(1);
        v[static_cast<size_t>(j + 1)] = rat(-1);
        W.basis.push_back(std::move(v));
        if (rank_q_rational(W.basis) != W.dim()) W.basis.pop_back();
      }
    }

    ++rep.cases;
    SubspaceEntropyResult res = subspace_entropy_check(pi, W, anchored);
    if (!res.ok)
      add_failure(rep, "subspace_entropy", {t, l, r, anchored ? 1 : 0},
                  "joint entropy " + fmt_double(res.h_joint) + " below bound plain " +
                      fmt_double(res.rhs_plain) + " / anchored " +
                      fmt_double(res.rhs_anchored));
  }
  return rep;
}

SuiteReport suite_slimages(u64 seed, int cases) {
  SuiteReport rep;
  rep.suite = "slimages";
  CounterRng root(seed);
  for (int t = 0; t < cases; ++t) {
    CounterRng rng = root.split(static_cast<u64>(t));
    const int l = 3 + static_cast<int>(rng.next_below(4));
    std::vector<rat> v;
    bool nonzero = false;
    while (!nonzero) {
      v = random_zero_sum_vector(rng, l);
      for (const rat& e : v) nonzero = nonzero || sgn(e) != 0;
    }
    std::vector<rat> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<rat>> perms;
    do {
      perms.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));

    ++rep.cases;
    if (rank_q_rational(perms) != l - 1)
      add_failure(rep, "span", {t, l},
                  "permutations of a nonzero zero-sum vector must span the hyperplane");
  }
  return rep;
}

SuiteReport suite_seqcount(u64 seed, int cases) {
  SuiteReport rep;
  rep.suite = "seqcount";
  CounterRng root(seed);
  for (int t = 0; t < cases; ++t) {
    CounterRng rng = root.split(static_cast<u64>(t));
    const int n = 1 + static_cast<int>(rng.next_below(60));
    const int s = 1 + static_cast<int>(rng.next_below(5));
    std::vector<unsigned long> parts(static_cast<size_t>(s), 0);
    int remaining = n;
    for (int i = 0; i + 1 < s; ++i) {
      parts[static_cast<size_t>(i)] = rng.next_below(static_cast<u64>(remaining) + 1);
      remaining -= static_cast<int>(parts[static_cast<size_t>(i)]);
    }
    parts[static_cast<size_t>(s - 1)] = static_cast<unsigned long>(remaining);

    ScaledDistribution omega;
    for (int i = 0; i < s; ++i)
      omega.weights.push_back(make_rat(static_cast<long>(parts[static_cast<size_t>(i)]), n));

    std::optional<std::vector<int>> classifier;
    if (t % 2 == 1) {
      classifier.emplace();
      for (int i = 0; i < s; ++i)
        classifier->push_back(static_cast<int>(rng.next_below(2)));
    }

    ++rep.cases;
    SequenceCountReport res = sequence_count_checks(omega, n, classifier);
    if (!res.ok_plain)
      add_failure(rep, "count_window", {t, n},
                  "log count " + fmt_double(res.log_M) + " outside [" +
                      fmt_double(res.log_lower) + ", " + fmt_double(res.log_upper) + "]");
    if (!res.ok_constrained)
      add_failure(rep, "constrained_count", {t, n},
                  "constrained log count " + fmt_double(*res.log_M_constrained) +
                      " exceeds " + fmt_double(*res.log_upper_constrained));
  }
  return rep;
}

SuiteReport suite_perturb(u64 seed, int cases) {
  SuiteReport rep;
  rep.suite = "perturb";
  CounterRng root(seed);
  for (int t = 0; t < cases; ++t) {
    CounterRng rng = root.split(static_cast<u64>(t));
    const int s = 2 + static_cast<int>(rng.next_below(5));
    const auto draw = [&]() {
      std::vector<rat> masses(static_cast<size_t>(s));
      rat total(0);
      for (auto& e : masses) {
        e = rat(static_cast<long>(1 + rng.next_below(20)));
        total += e;
      }
      ScaledDistribution d;
      for (auto& e : masses) d.weights.push_back(e / total);
      return d;
    };
    ScaledDistribution w0 = draw();
    ScaledDistribution w1 = draw();
    rat floor = w0[0];
    for (int i = 0; i < s; ++i) floor = std::min(floor, std::min(w0[i], w1[i]));

    ++rep.cases;
    PerturbationResult res = perturbation_entropy_check(w0, w1, floor);
    if (!res.ok)
      add_failure(rep, "perturbation", {t, s},
                  "entropy moved " + fmt_double(res.lhs) + " against allowance " +
                      fmt_double(res.rhs));
  }
  return rep;
}

SuiteReport suite_census() {
  SuiteReport rep;
  rep.suite = "census";
  const int m = 2, k = 3, n = 6;

  Params p;
  p.m = m;
  p.k = k;
  p.n = n;
  ScaledDistribution nu_m = nu(p);
  SymmetricTensor tau = symmetric_marginal_tensor(nu_m, k);
  RoundedPair rounded = round_tau(tau, n);
  const double H_tau = entropy(rounded.tau_tilde);
  const double H_nu = entropy(rounded.nu_n);

  std::vector<std::vector<int>> xs = {{1, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 1}};
  ++rep.cases;
  SpecialPairCensus census =
      special_pair_census(xs, rounded.nu_n, m, k, n, H_tau, H_nu, 10'000'000);
  if (census.enumerated == 0)
    add_failure(rep, "census_empty", {}, "no zero-sum tuples enumerated");
  for (const auto& [d, count] : census.count_by_d) {
    ++rep.cases;
    if (d < 1 || d > k - 2)
      add_failure(rep, "census_rank", {d},
                  "shared-position pair with difference rank outside 1..k-2");
    rep.stats.emplace_back("count_d" + std::to_string(d), std::to_string(count));
  }
  for (const auto& [d, ref] : census.reference_by_d)
    rep.stats.emplace_back("reference_d" + std::to_string(d), fmt_double(ref));
  rep.stats.emplace_back("enumerated", std::to_string(census.enumerated));
  return rep;
}

SuiteReport suite_pfs(u64 prime_limit) {
  SuiteReport rep;
  rep.suite = "pfs";
  u64 best_size = 0;
  for (u64 P = 2; P <= prime_limit; P = next_prime(P + 1)) {
    for (int k = 3; k <= 4; ++k) {
      ++rep.cases;
      FieldSetup fs = progression_free_set(P, k, PfsMethod::greedy);
      best_size = std::max(best_size, fs.R);
      auto violations = progression_free_violations(fs.Y, k);
      if (!violations.empty())
        add_failure(rep, "progression", {static_cast<long long>(P), k},
                    "greedy set admits " + std::to_string(violations.size()) +
                        " nonconstant solutions");
      if (P == 31 && k == 3) {
        rep.stats.emplace_back("size_P31_k3", std::to_string(fs.R));
        if (fs.R < 5)
          add_failure(rep, "progression_size", {static_cast<long long>(P), k},
                      "expected at least 5 members at P=31");
      }
    }
  }
  for (u64 P : {1009ULL, 1999ULL}) {
    if (P > prime_limit) continue;
    for (int k = 3; k <= 4; ++k) {
      ++rep.cases;
      FieldSetup fs = progression_free_set(P, k, PfsMethod::behrend);
      auto violations = progression_free_violations(fs.Y, k);
      if (!violations.empty())
        add_failure(rep, "progression_behrend", {static_cast<long long>(P), k},
                    "digit-vector set admits " + std::to_string(violations.size()) +
                        " nonconstant solutions");
    }
  }
  rep.stats.emplace_back("max_size", std::to_string(best_size));
  return rep;
}

std::vector<std::string> suite_names() {
  return {"sumfree_cross", "bounds", "lucas",    "rank",    "subspace",
          "slimages",      "seqcount", "perturb", "census", "pfs"};
}

SuiteReport run_suite(const std::string& name, u64 seed) {
  if (name == "sumfree_cross") return suite_sumfree_cross(seed, 12);
  if (name == "bounds") return suite_bounds(40, 6);
  if (name == "lucas") return suite_lucas();
  if (name == "rank") return suite_rank(seed, 1000);
  if (name == "subspace") return suite_subspace(seed, 1000);
  if (name == "slimages") return suite_slimages(seed, 100);
  if (name == "seqcount") return suite_seqcount(seed, 200);
  if (name == "perturb") return suite_perturb(seed, 200);
  if (name == "census") return suite_census();
  if (name == "pfs") return suite_pfs(2000);
  std::string known;
  for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  fail(errc::invalid_argument, "unknown suite '" + name + "'; known: " + known);
}

}  // namespace sumfree
