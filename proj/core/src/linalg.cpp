#include "sumfree/linalg.hpp"

#include <utility>

#include "sumfree/primes.hpp"

namespace sumfree {

int rank_q(std::vector<std::vector<bigint>> mat) {
  if (mat.empty()) return 0;
  const size_t rows = mat.size();
  const size_t cols = mat[0].size();
  for (const auto& row : mat)
    require(row.size() == cols, errc::invalid_argument, "ragged matrix");

  // Bareiss: after eliminating column c with pivot p, divide by the previous
  // pivot; all divisions are exact, entries stay integral.
  bigint prev_pivot(1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot_row = rank;
    while (pivot_row < rows && mat[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(mat[rank], mat[pivot_row]);
    const bigint pivot = mat[rank][col];
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        bigint v = mat[i][j] * pivot - mat[i][col] * mat[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        mat[i][j] = std::move(v);
      }
      mat[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_q_rational(const std::vector<std::vector<rat>>& mat) {
  std::vector<std::vector<bigint>> cleared;
  cleared.reserve(mat.size());
  for (const auto& row : mat) {
    bigint lcm(1);
    for (const rat& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<bigint> out;
    out.reserve(row.size());
    for (const rat& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
    cleared.push_back(std::move(out));
  }
  return rank_q(cleared);
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> mat, std::uint64_t p) {
  require(p >= 2, errc::invalid_argument, "modulus must be >= 2");
  if (mat.empty()) return 0;
  const size_t rows = mat.size();
  const size_t cols = mat[0].size();
  for (auto& row : mat) {
    require(row.size() == cols, errc::invalid_argument, "ragged matrix");
    for (auto& v : row) v %= p;
  }
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot_row = rank;
    while (pivot_row < rows && mat[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(mat[rank], mat[pivot_row]);
    const std::uint64_t inv = powmod_u64(mat[rank][col], p - 2, p);
    for (size_t j = col; j < cols; ++j) mat[rank][j] = mulmod_u64(mat[rank][j], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || mat[i][col] == 0) continue;
      const std::uint64_t f = mat[i][col];
      for (size_t j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod_u64(f, mat[rank][j], p);
        mat[i][j] = (mat[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace sumfree
