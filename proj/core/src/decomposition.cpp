#include "sumfree/decomposition.hpp"

#include <algorithm>
#include <string>

namespace sumfree {

namespace {

std::string level_tag(int level) { return "recursion level " + std::to_string(level); }

// LHS - RHS of the boundary inequality w(0) >= (k-1)w(n)+(k-2)w(n-1)+...+w(n-k+2).
rat boundary_slack(const ScaledDistribution& d, int k) {
  const int n = d.support_max();
  rat rhs(0);
  for (int i = 0; i <= k - 2; ++i) rhs += rat(k - 1 - i) * d[n - i];
  return d[0] - rhs;
}

int top_support(const ScaledDistribution& d) {
  for (int i = d.support_max(); i >= 0; --i)
    if (sgn(d[i]) > 0) return i;
  return -1;
}

SimpleCombination decompose_level(const ScaledDistribution& psi, int k, int level);

}  // namespace

void SimpleCombination::add(const std::vector<int>& tuple, const rat& coeff) {
  require(sgn(coeff) >= 0, errc::invalid_argument, "negative atom coefficient");
  if (sgn(coeff) == 0) return;
  require(static_cast<int>(tuple.size()) == k, errc::invalid_argument, "atom arity mismatch");
  int sum = 0;
  for (int a : tuple) {
    require(a >= 0 && a <= n, errc::invalid_argument, "atom entry out of range");
    sum += a;
  }
  require(sum == n, errc::invalid_argument, "atom entries must sum to n");
  coeffs[orbit_rep(tuple)] += coeff;
}

void SimpleCombination::add_scaled(const SimpleCombination& other, const rat& scale) {
  require(other.n == n && other.k == k, errc::invalid_argument,
          "combination shape mismatch");
  require(sgn(scale) >= 0, errc::invalid_argument, "negative combination scale");
  if (sgn(scale) == 0) return;
  for (const auto& [rep, c] : other.coeffs) coeffs[rep] += c * scale;
}

ScaledDistribution evaluate(const SimpleCombination& c) {
  ScaledDistribution d;
  d.weights.assign(static_cast<size_t>(c.n) + 1, rat(0));
  for (const auto& [rep, lambda] : c.coeffs)
    for (int a : rep) d[a] += lambda;
  return d;
}

bool TameReport::tame() const {
  return nonnegative && ok_mean && ok_monotone && ok_boundary && ok_convexity;
}

std::string TameReport::describe_failure() const {
  if (!nonnegative) return "negative weight";
  if (!ok_mean) return "mean gap " + rat_str(mean_gap);
  if (!ok_monotone) return "monotonicity violated by " + rat_str(-monotone_slack);
  if (!ok_boundary) return "boundary inequality violated by " + rat_str(-boundary_slack);
  if (!ok_convexity) return "convexity inequality violated by " + rat_str(-convexity_slack);
  return "tame";
}

TameReport is_tame(const ScaledDistribution& psi, int k) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(!psi.weights.empty(), errc::invalid_argument, "empty distribution");
  TameReport rep;
  const int n = psi.support_max();
  rep.n = n;
  rep.k = k;
  for (const rat& w : psi.weights)
    if (sgn(w) < 0) rep.nonnegative = false;

  rep.mean_gap = psi.first_moment() - make_rat(n, k) * psi.total();
  rep.ok_mean = sgn(rep.mean_gap) == 0;

  rep.applies_monotone = n >= 1;
  if (rep.applies_monotone) {
    bool have = false;
    for (int i = 1; i + 1 <= n; ++i) {
      rat gap = psi[i] - psi[i + 1];
      if (!have || gap < rep.monotone_slack) rep.monotone_slack = gap;
      have = true;
    }
    if (!have) rep.monotone_slack = rat(0);
    rep.ok_monotone = sgn(rep.monotone_slack) >= 0;
  }

  rep.applies_boundary = n >= k;
  if (rep.applies_boundary) {
    rep.boundary_slack = boundary_slack(psi, k);
    rep.ok_boundary = sgn(rep.boundary_slack) >= 0;
  }

  rep.applies_convexity = n >= 2 * k;
  if (rep.applies_convexity) {
    const int s = n / k;
    const int c = (n + k - 1) / k;
    rep.convexity_slack = psi[s - 1] + psi[c] - rat(2) * psi[s];
    rep.ok_convexity = sgn(rep.convexity_slack) >= 0;
  }
  return rep;
}

AlphaResult alpha(int n, int k, int j) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(n >= 1, errc::invalid_argument, "peeling atoms need n >= 1");
  require(j >= 1 && j <= n, errc::invalid_argument,
          "peeling index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  require(k * (j + 1) >= 2 * n, errc::invalid_argument,
          "peeling index " + std::to_string(j) + " too small: k(j+1) < 2n");

  const int l = n / j;
  const int r = n - l * j;
  require(l >= 1 && l <= k, errc::internal, "impossible quotient in peeling atom");

  AlphaResult res;
  res.witness.n = n;
  res.witness.k = k;

  const int ceil_nk = (n + k - 1) / k;
  if (l == k) {
    // k(j+1) >= 2n forces r = 0 here, so j = n/k.
    require(r == 0, errc::internal, "quotient k with nonzero remainder");
    res.witness.add(std::vector<int>(static_cast<size_t>(k), j), rat(1));
  } else if (r != ceil_nk || n < 2 * k) {
    for (int i = r; i <= j; ++i) {
      std::vector<int> tuple(static_cast<size_t>(l - 1), j);
      tuple.push_back(i);
      tuple.push_back(j + r - i);
      tuple.insert(tuple.end(), static_cast<size_t>(k - l - 1), 0);
      res.witness.add(tuple, rat(1));
    }
  } else if (l <= k - 2) {
    for (int i = r + 1; i <= j - 1; ++i) {
      std::vector<int> tuple(static_cast<size_t>(l - 1), j);
      tuple.push_back(i);
      tuple.push_back(j + r - i);
      tuple.insert(tuple.end(), static_cast<size_t>(k - l - 1), 0);
      res.witness.add(tuple, rat(1));
    }
    const rat c = make_rat(2, r + 1);
    for (int i = 0; i <= r; ++i) {
      std::vector<int> tuple(static_cast<size_t>(l), j);
      tuple.push_back(i);
      tuple.push_back(r - i);
      tuple.insert(tuple.end(), static_cast<size_t>(k - l - 2), 0);
      res.witness.add(tuple, c);
    }
  } else {
    for (int i = r + 1; i <= j - 1; ++i) {
      std::vector<int> tuple(static_cast<size_t>(k - 2), j);
      tuple.push_back(i);
      tuple.push_back(j + r - i);
      res.witness.add(tuple, rat(1));
    }
  }

  res.alpha = evaluate(res.witness);
  require(sgn(res.alpha[j]) > 0, errc::internal, "peeling atom vanishes at its top index");
  return res;
}

SlackResult slack_reduce(const ScaledDistribution& psi, int k) {
  TameReport tr = is_tame(psi, k);
  require(tr.tame(), errc::invalid_argument, "input not tame: " + tr.describe_failure());
  const int n = psi.support_max();
  require(n >= k, errc::invalid_argument, "slack reduction needs n >= k");

  SlackResult res;
  res.phi = psi;
  res.used.n = n;
  res.used.k = k;

  int guard = 0;
  for (;;) {
    rat slack = boundary_slack(res.phi, k);
    require(sgn(slack) >= 0, errc::internal, "boundary slack went negative while peeling");
    if (sgn(slack) == 0) break;

    const int j = top_support(res.phi);
    // Positive slack means phi(0) > 0, and the mean keeps mass above index 0.
    require(j >= 1, errc::internal, "positive boundary slack with support only at zero");
    require(k * (j + 1) >= 2 * n, errc::internal,
            "support bound violated at top index " + std::to_string(j));

    AlphaResult a = alpha(n, k, j);
    rat x = res.phi[j] / a.alpha[j];
    rat aslack = boundary_slack(a.alpha, k);
    if (sgn(aslack) > 0) x = std::min(x, rat(slack / aslack));
    require(sgn(x) > 0, errc::internal, "peeling step stalled");

    for (int i = 0; i <= n; ++i) {
      res.phi[i] -= x * a.alpha[i];
      require(sgn(res.phi[i]) >= 0, errc::internal, "peeling drove an entry negative");
    }
    res.used.add_scaled(a.witness, x);
    require(++guard <= n + 1, errc::internal, "boundary peeling failed to terminate");
  }

  TameReport fin = is_tame(res.phi, k);
  require(fin.tame(), errc::internal, "reduction lost tameness: " + fin.describe_failure());
  return res;
}

namespace {

SimpleCombination decompose_level(const ScaledDistribution& psi, int k, int level) {
  const int n = psi.support_max();
  TameReport tr = is_tame(psi, k);
  require(tr.tame(), level == 0 ? errc::invalid_argument : errc::internal,
          level_tag(level) + " (n=" + std::to_string(n) + "): " + tr.describe_failure());

  SimpleCombination out;
  out.n = n;
  out.k = k;
  if (psi.is_zero()) return out;

  if (n == 0) {
    out.add(std::vector<int>(static_cast<size_t>(k), 0), psi[0] / rat(k));
    return out;
  }

  if (n <= k) {
    ScaledDistribution cur = psi;
    int guard = 0;
    while (!cur.is_zero()) {
      if (sgn(cur[0]) == 0) {
        // No mass at 0 with mean n/k <= 1 forces n = k and support {1}.
        require(n == k, errc::internal, level_tag(level) + ": zero head below n = k");
        for (int i = 2; i <= n; ++i)
          require(sgn(cur[i]) == 0, errc::internal,
                  level_tag(level) + ": zero head with mass above index 1");
        out.add(std::vector<int>(static_cast<size_t>(k), 1), cur[1] / rat(k));
        break;
      }
      const int j = top_support(cur);
      require(j >= 1, errc::internal, level_tag(level) + ": mean broke with support at zero only");
      AlphaResult a = alpha(n, k, j);
      rat x = cur[j] / a.alpha[j];
      if (sgn(a.alpha[0]) > 0) x = std::min(x, rat(cur[0] / a.alpha[0]));
      require(sgn(x) > 0, errc::internal, level_tag(level) + ": peeling step stalled");
      for (int i = 0; i <= n; ++i) {
        cur[i] -= x * a.alpha[i];
        require(sgn(cur[i]) >= 0, errc::internal,
                level_tag(level) + ": peeling drove an entry negative");
      }
      out.add_scaled(a.witness, x);
      require(++guard <= 2 * (n + 2), errc::internal,
              level_tag(level) + ": base peeling failed to terminate");
    }
    return out;
  }

  // n > k: reach equality in the boundary inequality, strip the boundary
  // atoms, then shift every index down by one and recurse at n-k.
  SlackResult sr = slack_reduce(psi, k);
  out.add_scaled(sr.used, rat(1));
  const ScaledDistribution& phi = sr.phi;
  if (phi.is_zero()) return out;

  if (n >= 2 * k) {
    rat rhs(0);
    for (int i = 1; i <= k - 2; ++i) rhs += rat(i) * phi[n - i];
    rhs += rat(k - 1) * phi[n - k + 1];
    for (int i = k; i <= 2 * k - 3; ++i) rhs += rat(2 * k - 2 - i) * phi[n - i];
    require(phi[1] >= rhs, errc::internal,
            level_tag(level) + ": tail inequality failed after equality reduction");
  }

  ScaledDistribution theta = phi;
  for (int i = 0; i <= k - 2; ++i) {
    const rat coeff = phi[n - i];
    if (sgn(coeff) == 0) continue;
    std::vector<int> tuple;
    tuple.push_back(n - i);
    tuple.insert(tuple.end(), static_cast<size_t>(i), 1);
    tuple.insert(tuple.end(), static_cast<size_t>(k - 1 - i), 0);
    out.add(tuple, coeff);
    theta[n - i] -= coeff;
    theta[1] -= rat(i) * coeff;
    theta[0] -= rat(k - 1 - i) * coeff;
  }
  require(sgn(theta[0]) == 0, errc::internal,
          level_tag(level) + ": boundary strip left mass at index 0");
  for (int i = n - k + 2; i <= n; ++i)
    require(sgn(theta[i]) == 0, errc::internal,
            level_tag(level) + ": boundary strip left mass at index " + std::to_string(i));
  require(sgn(theta[1]) >= 0, errc::internal,
          level_tag(level) + ": boundary strip drove index 1 negative");

  ScaledDistribution eta;
  eta.weights.assign(static_cast<size_t>(n - k) + 1, rat(0));
  for (int i = 0; i <= n - k; ++i) eta[i] = theta[i + 1];

  SimpleCombination sub = decompose_level(eta, k, level + 1);
  for (const auto& [rep, lambda] : sub.coeffs) {
    std::vector<int> lifted = rep;
    for (int& v : lifted) v += 1;
    out.add(lifted, lambda);
  }
  return out;
}

}  // namespace

SimpleCombination tame_decompose(const ScaledDistribution& psi, int k) {
  return decompose_level(psi, k, 0);
}

SymmetricTensor symmetric_marginal_tensor(const ScaledDistribution& nu, int k, double tol) {
  require(k >= 3, errc::invalid_argument, "k must be >= 3");
  require(tol > 0, errc::invalid_argument, "tol must be positive");
  const int n = nu.support_max();
  nu.validate_nonnegative();
  rat total = nu.total();
  require(sgn(total) > 0, errc::invalid_argument, "marginal has no mass");

  ScaledDistribution target;
  target.weights = nu.weights;
  for (rat& w : target.weights) w /= total;
  require(target.first_moment() * rat(k) == rat(n), errc::invalid_argument,
          "marginal mean must be exactly n/k");

  SymmetricTensor tensor;
  tensor.r = n;
  tensor.arity = k;
  if (n == 0) {
    tensor.weight[std::vector<int>(static_cast<size_t>(k), 0)] = rat(1);
    return tensor;
  }

  // Strictness margins guard the subtraction below; they must clear the
  // tolerance comfortably or the caller needs a sharper input.
  const int s = n / k;
  const int c = (n + k - 1) / k;
  rat margin = target[n];
  for (int i = 0; i + 1 <= n; ++i) margin = std::min(margin, rat(target[i] - target[i + 1]));
  rat conv;
  if (n >= k) {
    conv = target[s - 1] + target[c] - rat(2) * target[s];
    margin = std::min(margin, conv);
  }
  require(to_double(margin) >= 100 * tol, errc::precision,
          "strictness margin " + std::to_string(to_double(margin)) +
              " below 100*tol; supply higher-precision input");

  // S(v): index-v mass of the sum of every atom in T_{n,k}.
  std::vector<rat> S(static_cast<size_t>(n) + 1);
  for (int v = 0; v <= n; ++v)
    S[static_cast<size_t>(v)] =
        rat(k) * rat(binomial(static_cast<unsigned long>(n - v + k - 2),
                              static_cast<unsigned long>(k - 2)));

  rat x_max = target[n] / S[static_cast<size_t>(n)];
  for (int i = 0; i + 1 <= n; ++i) {
    rat d = S[static_cast<size_t>(i)] - S[static_cast<size_t>(i + 1)];
    x_max = std::min(x_max, rat((target[i] - target[i + 1]) / d));
  }
  if (n >= k) {
    rat D = S[static_cast<size_t>(s - 1)] + S[static_cast<size_t>(c)] -
            rat(2) * S[static_cast<size_t>(s)];
    if (sgn(D) > 0) x_max = std::min(x_max, rat(conv / D));
  }
  const rat x = x_max / 2;
  require(sgn(x) > 0, errc::internal, "positive-floor step collapsed to zero");

  ScaledDistribution psi;
  psi.weights.assign(static_cast<size_t>(n) + 1, rat(0));
  for (int v = 0; v <= n; ++v) psi[v] = target[v] - x * S[static_cast<size_t>(v)];

  SimpleCombination lambda = tame_decompose(psi, k);
  // Add back x on every atom; per orbit that is x times the orbit size.
  CompositionTable table = enumerate_compositions(n, k);
  std::map<std::vector<int>, rat> orbit_total = lambda.coeffs;
  for (const auto& element : table.elements) {
    std::vector<int> rep = orbit_rep(element);
    // Each element of the table contributes x once; iterate reps via elements
    // so the total per orbit is x * orbit_size.
    orbit_total[rep] += x;
  }

  rat mass(0);
  for (const auto& [rep, w] : orbit_total) mass += w;
  for (const auto& [rep, w] : orbit_total) {
    rat per_element = (w / rat(bigint(orbit_size(rep)))) / mass;
    require(sgn(per_element) > 0, errc::internal, "tensor weight failed to stay positive");
    tensor.weight[rep] = per_element;
  }

  ScaledDistribution check = marginal(tensor);
  for (int v = 0; v <= n; ++v)
    require(check[v] == target[v], errc::internal, "tensor marginal mismatch");
  return tensor;
}

}  // namespace sumfree
