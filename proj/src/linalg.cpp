#include "discoh/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace discoh {

namespace {

constexpr std::uint64_t kCheckPrime = 2305843009213693951ULL;  // 2^61 - 1

std::vector<std::vector<std::uint64_t>> reduce_mod(const Matrix<Rational>& m, std::uint64_t p,
                                                   bool& ok) {
  ok = true;
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  const Integer P(std::to_string(p));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (is_zero(x)) continue;
      Integer num = x.get_num() % P;
      if (num < 0) num += P;
      Integer den = x.get_den() % P;
      if (den == 0) {
        ok = false;
        return a;
      }
      const auto n = std::stoull(num.get_str());
      const auto d = std::stoull(den.get_str());
      a[r][c] = mulmod(n, powmod(d, p - 2, p), p);
    }
  return a;
}

std::size_t rank_u64(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const auto inv = powmod(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const auto f = mulmod(a[i][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        if (a[r][k] == 0) continue;
        a[i][k] = (a[i][k] + p - mulmod(f, a[r][k], p)) % p;
      }
    }
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(m(r, c))) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(m(r, c))) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0 && (piv == rows || abs(a[i][c]) > abs(a[piv][c]))) piv = i;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        mpz_divexact(a[i][k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(const Matrix<Rational>& m, std::uint64_t p) {
  bool ok = true;
  auto a = reduce_mod(m, p, ok);
  if (!ok) throw DomainError("denominator divisible by " + std::to_string(p));
  return rank_u64(std::move(a), p);
}

std::size_t rank(const Matrix<Rational>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  bool ok = true;
  auto a = reduce_mod(m, kCheckPrime, ok);
  if (ok && rank_u64(std::move(a), kCheckPrime) == std::min(m.rows(), m.cols()))
    return std::min(m.rows(), m.cols());
  return bareiss_rank(m);
}

std::size_t rank(const Matrix<Fp>& m) {
  std::uint64_t p = 0;
  for (std::size_t r = 0; r < m.rows() && !p; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).p) {
        p = m(r, c).p;
        break;
      }
  if (!p) {
    Matrix<Rational> q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(static_cast<long>(m(r, c).v));
    return rank(q);
  }
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).residue(p);
  return rank_u64(std::move(a), p);
}

namespace detail {

void check_shapes(const std::vector<std::size_t>& dims, std::size_t k, std::size_t rows,
                  std::size_t cols) {
  if (cols != dims[k] || rows != dims[k + 1])
    throw InvariantError("map out of degree " + std::to_string(k) + " has shape " +
                         std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
                         std::to_string(dims[k + 1]) + "x" + std::to_string(dims[k]));
}

BettiNumbers betti_from_ranks(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& ranks) {
  BettiNumbers out;
  out.dims = dims;
  out.ranks = ranks;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t out_rank = k < ranks.size() ? ranks[k] : 0;
    const std::size_t in_rank = k > 0 ? ranks[k - 1] : 0;
    if (out_rank + in_rank > dims[k])
      throw InvariantError("ranks exceed dimension in degree " + std::to_string(k));
    out.betti.push_back(dims[k] - out_rank - in_rank);
    const long sign = (k % 2 == 0) ? 1 : -1;
    out.euler += sign * static_cast<long>(dims[k]);
  }
  long check = 0;
  for (std::size_t k = 0; k < out.betti.size(); ++k)
    check += ((k % 2 == 0) ? 1 : -1) * static_cast<long>(out.betti[k]);
  if (check != out.euler) throw InvariantError("Euler characteristic mismatch");
  return out;
}

}  // namespace detail

}  // namespace discoh
