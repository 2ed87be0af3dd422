#pragma once

// Independent feasibility check for psi = sum_a lambda_a * atom_a with
// lambda >= 0: phase-1 simplex over exact rationals with Bland's rule.
// Deliberately separate from the library's constructive decomposition so the
// two routes can disagree in tests.

#include <set>
#include <vector>

#include "sumfree/compositions.hpp"
#include "sumfree/distributions.hpp"

namespace lp_oracle {

// True iff psi lies in the cone spanned by the atoms of T_{n,k}, where the
// atom of a k-tuple (a_1,...,a_k) is the weight vector 1_{a_1}+...+1_{a_k}
// on {0,...,n}.
inline bool cone_feasible(const sumfree::ScaledDistribution& psi, int k) {
  using sumfree::rat;
  const int n = psi.support_max();
  const int rows = n + 1;

  std::set<std::vector<int>> rep_set;
  for (const auto& e : sumfree::enumerate_compositions(n, k).elements)
    rep_set.insert(sumfree::orbit_rep(e));
  const std::vector<std::vector<int>> atoms(rep_set.begin(), rep_set.end());
  const int N = static_cast<int>(atoms.size());
  const int cols = N + rows;  // structural variables then one artificial per row

  std::vector<std::vector<rat>> T(static_cast<size_t>(rows),
                                  std::vector<rat>(static_cast<size_t>(cols), rat(0)));
  std::vector<rat> rhs(static_cast<size_t>(rows));
  std::vector<int> basis(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    rhs[static_cast<size_t>(i)] = psi[i];
    if (sgn(psi[i]) < 0) return false;
    T[static_cast<size_t>(i)][static_cast<size_t>(N + i)] = 1;
    basis[static_cast<size_t>(i)] = N + i;
  }
  for (int a = 0; a < N; ++a)
    for (int c : atoms[static_cast<size_t>(a)])
      T[static_cast<size_t>(c)][static_cast<size_t>(a)] += 1;

  // Minimize the artificial sum: w = w0 + sum_j d_j x_j over nonbasic x.
  std::vector<rat> d(static_cast<size_t>(cols), rat(0));
  rat w0 = 0;
  for (int i = 0; i < rows; ++i) {
    w0 += rhs[static_cast<size_t>(i)];
    for (int j = 0; j < N; ++j)
      d[static_cast<size_t>(j)] -= T[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (sgn(d[static_cast<size_t>(j)]) < 0) {
        enter = j;  // Bland: smallest eligible index
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    rat best;
    for (int i = 0; i < rows; ++i) {
      const rat& t = T[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (sgn(t) <= 0) continue;
      const rat ratio = rhs[static_cast<size_t>(i)] / t;
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded direction; unreachable with w >= 0

    auto& prow = T[static_cast<size_t>(leave)];
    const rat piv = prow[static_cast<size_t>(enter)];
    for (auto& v : prow) v /= piv;
    rhs[static_cast<size_t>(leave)] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const rat f = T[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < cols; ++j)
        T[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
      rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(leave)];
    }
    const rat fd = d[static_cast<size_t>(enter)];
    if (sgn(fd) != 0) {
      for (int j = 0; j < cols; ++j)
        d[static_cast<size_t>(j)] -= fd * prow[static_cast<size_t>(j)];
      w0 += fd * rhs[static_cast<size_t>(leave)];
    }
    basis[static_cast<size_t>(leave)] = enter;
  }
  return sgn(w0) == 0;
}

}  // namespace lp_oracle
