#pragma once

#include <functional>
#include <map>
#include <vector>

#include "discoh/combinatorics.hpp"
#include "discoh/fox.hpp"
#include "discoh/group_ring.hpp"
#include "discoh/params.hpp"

namespace discoh {

/// Block structure of the resolution: C_q is the sum over |J| = q of free
/// modules of rank d_J, laid out in the J order of enumerate_basis. Inside a
/// block the index (i_1, ..., i_q) runs with i_1 slowest, so C_q and A^q share
/// one coordinate system. Accepts the degenerate level ell == n.
class ResolutionLayout {
 public:
  struct Block {
    std::vector<int> J;
    std::size_t rank;
    std::size_t offset;
  };

  ResolutionLayout(int n, int ell);
  explicit ResolutionLayout(const ArrangementParams& params)
      : ResolutionLayout(params.n(), params.ell()) {}

  int n() const { return n_; }
  int ell() const { return ell_; }
  int top() const { return n_ - ell_; }
  std::size_t dim(int q) const;
  const std::vector<Block>& blocks(int q) const;
  std::size_t offset(const std::vector<int>& J) const;

 private:
  int n_, ell_;
  std::vector<std::vector<Block>> blocks_;
  std::vector<std::size_t> dims_;
  std::map<std::vector<int>, std::size_t> offsets_;
};

namespace detail {

/// Routes the components (Delta_J, [Delta_{J^1}]^{d_1}, ..., [Delta_{J^{q-1}}]^{d_{q-1}})
/// of every J with |J| = q into the matrix of d_q (rows C_q, columns C_{q-1}).
template <class T, class DeltaFn>
Matrix<T> assemble(const ResolutionLayout& layout, int q, DeltaFn&& delta) {
  Matrix<T> out(layout.dim(q), layout.dim(q - 1));
  for (const auto& blk : layout.blocks(q)) {
    const auto& J = blk.J;
    std::size_t copies = 1;
    for (int p = 0; p < q; ++p) {
      const std::vector<int> tail(J.begin() + p, J.end());
      std::vector<int> target = J;
      target.erase(target.begin() + p);
      const Matrix<T>& D = delta(tail);
      const std::size_t target_off = layout.offset(target);
      for (std::size_t c = 0; c < copies; ++c)
        out.set_block(blk.offset + c * D.rows(), target_off + c * D.cols(), D);
      copies *= static_cast<std::size_t>(J[p] - 1);
    }
  }
  return out;
}

}  // namespace detail

/// Delta_J over the group ring: the column (gamma_{i,j} - 1) for J = {j},
/// and -rho~_{j_q}(Delta_{J_{q-1}}) otherwise. Shape d_J x d_{J^1}.
GRMatrix delta_J(const std::vector<int>& J);

/// d_q : C_q -> C_{q-1} over the group ring (row convention: rows index C_q).
/// Symbolic; intended for small n.
GRMatrix assemble_boundary(const ArrangementParams& params, int q);
GRMatrix assemble_boundary(int n, int ell, int q);

/// Evaluates the boundary maps at a torus point without expanding group-ring
/// words. Delta_J(t) is computed as the representation of gamma_{i_1,j_1}
/// through the nested rho~_{j_2}, ..., rho~_{j_q}, memoized per (levels, letter).
template <class T>
class BoundaryEvaluator {
 public:
  using Lift = std::function<T(const Rational&)>;

  /// t and t_inv hold the values of gamma_{i,j} and gamma_{i,j}^{-1} in the
  /// global pair order.
  BoundaryEvaluator(int n, int ell, std::vector<T> t, std::vector<T> t_inv, Lift lift)
      : layout_(n, ell), n_(n), ell_(ell), t_(std::move(t)), t_inv_(std::move(t_inv)),
        lift_(std::move(lift)) {}

  const ResolutionLayout& layout() const { return layout_; }

  /// d_q(t), rows C_q, columns C_{q-1}.
  Matrix<T> boundary(int q) {
    if (q < 1 || q > layout_.top()) throw DomainError("boundary degree out of range: " + std::to_string(q));
    return detail::assemble<T>(layout_, q, [this](const std::vector<int>& J) -> const Matrix<T>& {
      return delta(J);
    });
  }

  const Matrix<T>& delta(const std::vector<int>& J) {
    if (J.empty()) throw DomainError("Delta_J needs a nonempty J");
    if (auto it = delta_cache_.find(J); it != delta_cache_.end()) return it->second;
    const unsigned rest = mask_of(J.begin() + 1, J.end());
    const std::size_t d_rest = rank_of(rest);
    const int j1 = J[0];
    Matrix<T> out(static_cast<std::size_t>(j1 - 1) * d_rest, d_rest);
    const bool negate = (J.size() - 1) % 2 == 1;
    for (int i = 1; i < j1; ++i) {
      Matrix<T> block = rep(rest, Letter{{i, j1}, 1});
      for (std::size_t k = 0; k < d_rest; ++k) block(k, k) -= T(1);
      if (negate) block = -block;
      out.set_block(static_cast<std::size_t>(i - 1) * d_rest, 0, block);
    }
    return delta_cache_.emplace(J, std::move(out)).first->second;
  }

 private:
  template <class It>
  static unsigned mask_of(It b, It e) {
    unsigned m = 0;
    for (; b != e; ++b) m |= 1u << *b;
    return m;
  }
  static int lowest(unsigned mask) { return __builtin_ctz(mask); }
  static std::size_t rank_of(unsigned mask) {
    std::size_t d = 1;
    for (int j = 0; j < 32; ++j)
      if (mask >> j & 1) d *= static_cast<std::size_t>(j - 1);
    return d;
  }

  std::size_t coordinate(const Pair& p) const {
    std::size_t offset = 0;
    for (int jj = ell_ + 1; jj < p.j; ++jj) offset += static_cast<std::size_t>(jj - 1);
    return offset + static_cast<std::size_t>(p.i - 1);
  }

  // Value of a letter after passing through rho~ at every level in `mask`.
  const Matrix<T>& rep(unsigned mask, const Letter& x) {
    const auto key = std::make_pair(mask, x);
    if (auto it = rep_cache_.find(key); it != rep_cache_.end()) return it->second;
    Matrix<T> out;
    if (mask == 0) {
      out = Matrix<T>(1, 1);
      const std::size_t c = coordinate(x.gen);
      out(0, 0) = x.exp > 0 ? t_[c] : t_inv_[c];
    } else if (x.gen.j >= lowest(mask)) {
      out = Matrix<T>::identity(rank_of(mask));
    } else {
      const int j0 = lowest(mask);
      const unsigned rest = mask & ~(1u << j0);
      const std::size_t dr = rank_of(rest);
      const GRMatrix& rho = rho_letter(x, j0);
      out = Matrix<T>(rho.rows() * dr, rho.cols() * dr);
      for (std::size_t a = 0; a < rho.rows(); ++a)
        for (std::size_t b = 0; b < rho.cols(); ++b)
          if (!is_zero(rho(a, b))) out.set_block(a * dr, b * dr, element(rest, rho(a, b)));
    }
    return rep_cache_.emplace(key, std::move(out)).first->second;
  }

  Matrix<T> element(unsigned mask, const GroupRingElement& x) {
    const std::size_t d = rank_of(mask);
    Matrix<T> sum(d, d);
    for (const auto& [w, c] : x.terms()) {
      const Matrix<T>& m = word(mask, w);
      if (c == 1) sum += m;
      else if (c == -1) sum -= m;
      else sum += lift_(c) * m;
    }
    return sum;
  }

  const Matrix<T>& word(unsigned mask, const Word& w) {
    const auto key = std::make_pair(mask, w);
    if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;
    Matrix<T> prod;
    bool started = false;
    for (const auto& x : w.letters()) {
      if (mask != 0 && x.gen.j >= lowest(mask)) continue;
      const Matrix<T>& m = rep(mask, x);
      prod = started ? prod * m : m;
      started = true;
    }
    if (!started) prod = Matrix<T>::identity(rank_of(mask));
    return word_cache_.emplace(key, std::move(prod)).first->second;
  }

  ResolutionLayout layout_;
  int n_, ell_;
  std::vector<T> t_, t_inv_;
  Lift lift_;
  std::map<std::vector<int>, Matrix<T>> delta_cache_;
  std::map<std::pair<unsigned, Letter>, Matrix<T>> rep_cache_;
  std::map<std::pair<unsigned, Word>, Matrix<T>> word_cache_;
};

/// d_q(t) over the rationals.
Matrix<Rational> boundary_eval(const ArrangementParams& params, int q, const std::vector<Rational>& t);
/// d_q(t) over F_p (all coordinates in one prime field).
Matrix<Fp> boundary_eval(const ArrangementParams& params, int q, const std::vector<Fp>& t);
/// Derivative at t = 1 of d_q in direction lambda.
Matrix<Rational> boundary_derivative(const ArrangementParams& params, int q,
                                     const std::vector<Rational>& lambda);
/// All boundary maps d_1 .. d_top at once (shares memoized work).
std::vector<Matrix<Rational>> all_boundaries(const ArrangementParams& params,
                                             const std::vector<Rational>& t);
std::vector<Matrix<Fp>> all_boundaries(const ArrangementParams& params, const std::vector<Fp>& t);
std::vector<Matrix<Rational>> all_boundary_derivatives(const ArrangementParams& params,
                                                       const std::vector<Rational>& lambda);

/// delta^q(t) : C^q -> C^{q+1} in column convention (rows index C^{q+1}).
/// Since d_{q+1}(t) is stored with rows indexing C_{q+1}, this is the same
/// array times (-1)^q; as a map it is the signed transpose of d_{q+1}(t).
template <class T>
Matrix<T> cochain_from_boundary(int q, const Matrix<T>& boundary_q_plus_1) {
  return q % 2 == 0 ? boundary_q_plus_1 : -boundary_q_plus_1;
}
Matrix<Rational> cochain_matrix(const ArrangementParams& params, int q, const std::vector<Rational>& t);
Matrix<Fp> cochain_matrix(const ArrangementParams& params, int q, const std::vector<Fp>& t);

/// Blocks of d_{q+1} under C_{q+1} = D_q + C^_{q+1}, C_q = D_{q-1} + C^_q
/// (rows first, columns second), with the structural checks.
struct MappingConeReport {
  int q = 0;
  GRMatrix upper_left;   // D_q -> D_{q-1}, in resolution order
  GRMatrix upper_right;  // Xi_q
  GRMatrix lower_left;   // must vanish
  GRMatrix lower_right;  // d^_{q+1}
  bool lower_left_zero = false;
  bool hat_matches = false;  // lower_right == d_{q+1} of A(n, ell+1)
  bool d_matches = false;    // upper_left == [d^_q]^ell after ordering by i_1
  bool ok() const { return lower_left_zero && hat_matches && d_matches; }
};

MappingConeReport mapping_cone_blocks(const ArrangementParams& params, int q);

/// The same three checks on d_{q+1}(t); usable where the symbolic blocks are too large.
struct MappingConeCheck {
  int q = 0;
  bool lower_left_zero = false;
  bool hat_matches = false;
  bool d_matches = false;
  bool ok() const { return lower_left_zero && hat_matches && d_matches; }
};

MappingConeCheck mapping_cone_check(const ArrangementParams& params, int q, const std::vector<Rational>& t);

}  // namespace discoh
