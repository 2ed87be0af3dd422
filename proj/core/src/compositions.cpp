#include "sumfree/compositions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace sumfree {

namespace {

void enumerate_rec(int rest, int slots, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(rest);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    prefix.push_back(v);
    enumerate_rec(rest - v, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<unsigned long> value_counts(const std::vector<int>& tuple) {
  int top = 0;
  for (int v : tuple) top = std::max(top, v);
  std::vector<unsigned long> counts(static_cast<size_t>(top) + 1, 0);
  for (int v : tuple) ++counts[static_cast<size_t>(v)];
  return counts;
}

}  // namespace

CompositionTable enumerate_compositions(int r, int arity) {
  require(r >= 0, errc::invalid_argument, "r must be >= 0");
  require(arity >= 2, errc::invalid_argument, "arity must be >= 2");
  CompositionTable t;
  t.r = r;
  t.arity = arity;
  std::vector<int> prefix;
  enumerate_rec(r, arity, prefix, t.elements);
  return t;
}

std::vector<int> orbit_rep(std::vector<int> t) {
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

std::uint64_t orbit_size(const std::vector<int>& rep) {
  bigint size = multinomial(rep.size(), value_counts(rep));
  require(size.fits_ulong_p(), errc::invalid_argument, "orbit size overflows 64 bits");
  return size.get_ui();
}

rat SymmetricTensor::total() const {
  rat t(0);
  for (const auto& [rep, w] : weight) t += rat(static_cast<long>(orbit_size(rep))) * w;
  return t;
}

rat SymmetricTensor::min_weight() const {
  require(!weight.empty(), errc::invalid_argument, "min weight of an empty tensor");
  rat best = weight.begin()->second;
  for (const auto& [rep, w] : weight) best = std::min(best, w);
  return best;
}

void SymmetricTensor::validate() const {
  for (const auto& [rep, w] : weight) {
    require(static_cast<int>(rep.size()) == arity, errc::invalid_argument,
            "tensor key arity mismatch");
    int sum = 0;
    for (size_t i = 0; i < rep.size(); ++i) {
      require(rep[i] >= 0, errc::invalid_argument, "negative tensor key entry");
      require(i == 0 || rep[i - 1] >= rep[i], errc::invalid_argument,
              "tensor key not sorted descending");
      sum += rep[i];
    }
    require(sum == r, errc::invalid_argument, "tensor key does not sum to r");
    require(sgn(w) >= 0, errc::invalid_argument, "negative tensor weight");
  }
}

ScaledDistribution marginal(const SymmetricTensor& t) {
  ScaledDistribution d;
  d.weights.assign(static_cast<size_t>(t.r) + 1, rat(0));
  for (const auto& [rep, w] : t.weight) {
    if (sgn(w) == 0) continue;
    auto counts = value_counts(rep);
    for (size_t v = 0; v < counts.size(); ++v) {
      if (counts[v] == 0) continue;
      // Elements of the orbit with first coordinate v: permutations of the rest.
      auto rest = counts;
      --rest[v];
      bigint elems = multinomial(rep.size() - 1, rest);
      d.weights[v] += w * rat(elems);
    }
  }
  return d;
}

double entropy(const SymmetricTensor& t) {
  require(t.total() == 1, errc::invalid_argument, "entropy requires total mass 1");
  double h = 0;
  for (const auto& [rep, w] : t.weight) {
    if (sgn(w) <= 0) continue;
    double wd = to_double(w);
    h -= static_cast<double>(orbit_size(rep)) * wd * std::log(wd);
  }
  return h;
}

SymmetricTensor symmetrize(const CompositionTable& table, const std::vector<rat>& w) {
  require(w.size() == table.elements.size(), errc::invalid_argument,
          "weight list does not match the composition table");
  SymmetricTensor t;
  t.r = table.r;
  t.arity = table.arity;
  std::map<std::vector<int>, rat> orbit_total;
  for (size_t i = 0; i < w.size(); ++i) {
    require(sgn(w[i]) >= 0, errc::invalid_argument, "negative weight in symmetrize");
    orbit_total[orbit_rep(table.elements[i])] += w[i];
  }
  for (auto& [rep, total] : orbit_total)
    t.weight[rep] = total / rat(static_cast<long>(orbit_size(rep)));
  return t;
}

SymmetricTensor maxent_with_marginals(const ScaledDistribution& target, int r, int arity,
                                      const MaxentOptions& opt) {
  require(target.support_max() == r, errc::invalid_argument,
          "target support must be exactly {0,...,r}");
  target.validate_nonnegative();
  rat total = target.total();
  require(sgn(total) > 0, errc::invalid_argument, "target has no mass");
  require(target.first_moment() * rat(arity) == rat(r) * total, errc::invalid_argument,
          "target mean must be r/arity");

  std::vector<double> t(static_cast<size_t>(r) + 1);
  for (int v = 0; v <= r; ++v) t[static_cast<size_t>(v)] = to_double(target[v] / total);

  CompositionTable table = enumerate_compositions(r, arity);
  const size_t count = table.elements.size();
  std::vector<double> w(count, 1.0 / static_cast<double>(count));
  for (size_t i = 0; i < count; ++i)
    for (int v : table.elements[i])
      if (sgn(target[v]) == 0) w[i] = 0;
  double live = 0;
  for (double x : w) live += x;
  require(live > 0, errc::invalid_argument, "target marginal infeasible on this support");

  auto projection = [&](int c) {
    std::vector<double> s(static_cast<size_t>(r) + 1, 0.0);
    for (size_t i = 0; i < count; ++i)
      s[static_cast<size_t>(table.elements[i][static_cast<size_t>(c)])] += w[i];
    return s;
  };
  auto max_residual = [&]() {
    double worst = 0;
    for (int c = 0; c < arity; ++c) {
      auto s = projection(c);
      double l1 = 0;
      for (int v = 0; v <= r; ++v) l1 += std::abs(s[static_cast<size_t>(v)] - t[static_cast<size_t>(v)]);
      worst = std::max(worst, l1);
    }
    return worst;
  };

  int cycles = 0;
  double residual = max_residual();
  while (residual > opt.tol / 2) {
    require(cycles < opt.iteration_cap, errc::nonconvergence,
            "marginal fitting residual " + std::to_string(residual) + " after " +
                std::to_string(cycles) + " cycles");
    for (int c = 0; c < arity; ++c) {
      auto s = projection(c);
      for (int v = 0; v <= r; ++v) {
        require(s[static_cast<size_t>(v)] > 0 || t[static_cast<size_t>(v)] == 0,
                errc::invalid_argument, "target marginal infeasible on this support");
      }
      for (size_t i = 0; i < count; ++i) {
        int v = table.elements[i][static_cast<size_t>(c)];
        if (w[i] > 0) w[i] *= t[static_cast<size_t>(v)] / s[static_cast<size_t>(v)];
      }
    }
    ++cycles;
    residual = max_residual();
  }

  // Exact orbit average of the fitted weights, then exact normalization.
  std::vector<rat> exact(count);
  for (size_t i = 0; i < count; ++i) exact[i] = rat(w[i]);
  SymmetricTensor result = symmetrize(table, exact);
  rat mass = result.total();
  require(sgn(mass) > 0, errc::internal, "fitted tensor lost all mass");
  for (auto& [rep, wr] : result.weight) wr /= mass;
  result.real_mode = true;

  ScaledDistribution check = marginal(result);
  double l1 = 0;
  for (int v = 0; v <= r; ++v) l1 += std::abs(to_double(check[v]) - t[static_cast<size_t>(v)]);
  require(l1 <= opt.tol, errc::nonconvergence,
          "symmetrized projection residual " + std::to_string(l1) + " exceeds tolerance");
  return result;
}

}  // namespace sumfree
