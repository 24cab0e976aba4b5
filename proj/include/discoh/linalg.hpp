#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discoh/matrix.hpp"
#include "discoh/scalar.hpp"

namespace discoh {

/// Exact rank. Rows are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination with max-|pivot| selection. A full-rank answer from
/// a large prime is accepted early since rank mod p never exceeds the true rank.
std::size_t rank(const Matrix<Rational>& m);
/// Gaussian elimination over the prime carried by the entries.
std::size_t rank(const Matrix<Fp>& m);
/// Rank over F_p of an integer/rational matrix reduced mod p. Denominators
/// divisible by p raise DomainError.
std::size_t rank_mod_p(const Matrix<Rational>& m, std::uint64_t p);

/// Cochain complex 0 -> V_0 -> ... -> V_d -> 0 with maps[k] : V_k -> V_{k+1}
/// written in column convention (rows index V_{k+1}).
template <class T>
struct GradedComplexEval {
  std::vector<std::size_t> dims;
  std::vector<Matrix<T>> maps;
};

struct BettiNumbers {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  // rank of maps[k]
  std::vector<std::size_t> betti;
  long euler = 0;
};

namespace detail {
void check_shapes(const std::vector<std::size_t>& dims, std::size_t k, std::size_t rows,
                  std::size_t cols);
BettiNumbers betti_from_ranks(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& ranks);
}  // namespace detail

/// b_k = dim V_k - rank maps[k] - rank maps[k-1]. Verifies every composition
/// vanishes first; throws InvariantError naming the degree otherwise.
template <class T>
BettiNumbers complex_betti(const GradedComplexEval<T>& cx) {
  if (cx.maps.size() + 1 != cx.dims.size() && !(cx.dims.empty() && cx.maps.empty()))
    throw InvariantError("complex needs exactly one map between consecutive degrees");
  for (std::size_t k = 0; k < cx.maps.size(); ++k)
    detail::check_shapes(cx.dims, k, cx.maps[k].rows(), cx.maps[k].cols());
  for (std::size_t k = 0; k + 1 < cx.maps.size(); ++k)
    if (!(cx.maps[k + 1] * cx.maps[k]).is_zero_matrix())
      throw InvariantError("composition of maps out of degree " + std::to_string(k) +
                           " and " + std::to_string(k + 1) + " is nonzero");
  std::vector<std::size_t> ranks;
  for (const auto& m : cx.maps) ranks.push_back(rank(m));
  return detail::betti_from_ranks(cx.dims, ranks);
}

}  // namespace discoh
