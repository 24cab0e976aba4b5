#include "discoh/resolution.hpp"

#include <mutex>

namespace discoh {

ResolutionLayout::ResolutionLayout(int n, int ell) : n_(n), ell_(ell) {
  if (n < 2 || ell < 1 || ell > n) throw DomainError("invalid resolution parameters");
  for (int q = 0; q <= n - ell; ++q) {
    std::vector<Block> blocks;
    std::size_t off = 0;
    for (const auto& J : subsets(ell + 1, n, q)) {
      const std::size_t r = module_rank(J);
      blocks.push_back({J, r, off});
      offsets_[J] = off;
      off += r;
    }
    blocks_.push_back(std::move(blocks));
    dims_.push_back(off);
  }
}

std::size_t ResolutionLayout::dim(int q) const {
  if (q < 0 || q > top()) return 0;
  return dims_[q];
}

const std::vector<ResolutionLayout::Block>& ResolutionLayout::blocks(int q) const {
  static const std::vector<Block> none;
  if (q < 0 || q > top()) return none;
  return blocks_[q];
}

std::size_t ResolutionLayout::offset(const std::vector<int>& J) const {
  auto it = offsets_.find(J);
  if (it == offsets_.end()) throw DomainError("J is not a block of this layout");
  return it->second;
}

namespace {

const GRMatrix& delta_cached(const std::vector<int>& J) {
  static std::recursive_mutex mtx;
  static std::map<std::vector<int>, GRMatrix> cache;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  if (auto it = cache.find(J); it != cache.end()) return it->second;
  GRMatrix m;
  if (J.size() == 1) {
    const int j = J[0];
    m = GRMatrix(j - 1, 1);
    for (int i = 1; i < j; ++i) m(i - 1, 0) = GroupRingElement(Word::generator(i, j)) - GroupRingElement(1);
  } else {
    const std::vector<int> head(J.begin(), J.end() - 1);
    m = -rho_tilde(delta_cached(head), J.back());
  }
  return cache.emplace(J, std::move(m)).first->second;
}

}  // namespace

GRMatrix delta_J(const std::vector<int>& J) {
  if (J.empty()) throw DomainError("Delta_J needs a nonempty J");
  for (std::size_t k = 0; k < J.size(); ++k)
    if (J[k] < 2 || (k > 0 && J[k] <= J[k - 1])) throw DomainError("J must be increasing within [2, n]");
  return delta_cached(J);
}

GRMatrix assemble_boundary(int n, int ell, int q) {
  ResolutionLayout layout(n, ell);
  if (q < 1 || q > std::max(layout.top(), 1)) throw DomainError("boundary degree out of range: " + std::to_string(q));
  return detail::assemble<GroupRingElement>(layout, q, [](const std::vector<int>& J) -> const GRMatrix& {
    return delta_cached(J);
  });
}

GRMatrix assemble_boundary(const ArrangementParams& params, int q) {
  if (q < 1 || q > params.rank()) throw DomainError("boundary degree out of range: " + std::to_string(q));
  return assemble_boundary(params.n(), params.ell(), q);
}

namespace {

BoundaryEvaluator<Rational> rational_evaluator(const ArrangementParams& params,
                                               const std::vector<Rational>& t) {
  check_torus_point(params, t);
  std::vector<Rational> inv;
  for (const auto& x : t) inv.push_back(1 / x);
  return BoundaryEvaluator<Rational>(params.n(), params.ell(), t, inv, [](const Rational& c) { return c; });
}

BoundaryEvaluator<Fp> fp_evaluator(const ArrangementParams& params, const std::vector<Fp>& t) {
  check_torus_point(params, t);
  std::uint64_t p = 0;
  for (const auto& x : t) {
    if (!x.p) throw DomainError("torus point over F_p needs bound coordinates");
    if (p && x.p != p) throw ScalarKindError("torus point mixes prime fields");
    p = x.p;
  }
  std::vector<Fp> inv;
  for (const auto& x : t) inv.push_back(inverse(x));
  return BoundaryEvaluator<Fp>(params.n(), params.ell(), t, inv, [p](const Rational& c) {
    if (c.get_den() != 1) throw DomainError("non-integral coefficient over a prime field");
    return Fp(c.get_num().get_si(), p);
  });
}

BoundaryEvaluator<Dual<Rational>> dual_evaluator(const ArrangementParams& params,
                                                 const std::vector<Rational>& lambda) {
  if (lambda.size() != params.hyperplane_count())
    throw DomainError("weight vector has " + std::to_string(lambda.size()) + " entries, expected N=" +
                      std::to_string(params.hyperplane_count()));
  std::vector<Dual<Rational>> t, inv;
  for (const auto& x : lambda) {
    t.push_back({Rational(1), x});
    inv.push_back({Rational(1), -x});
  }
  return BoundaryEvaluator<Dual<Rational>>(params.n(), params.ell(), t, inv, [](const Rational& c) {
    return Dual<Rational>(c, Rational(0));
  });
}

void check_degree(const ArrangementParams& params, int q) {
  if (q < 1 || q > params.rank()) throw DomainError("boundary degree out of range: " + std::to_string(q));
}

}  // namespace

Matrix<Rational> boundary_eval(const ArrangementParams& params, int q, const std::vector<Rational>& t) {
  check_degree(params, q);
  return rational_evaluator(params, t).boundary(q);
}

Matrix<Fp> boundary_eval(const ArrangementParams& params, int q, const std::vector<Fp>& t) {
  check_degree(params, q);
  return fp_evaluator(params, t).boundary(q);
}

Matrix<Rational> boundary_derivative(const ArrangementParams& params, int q,
                                     const std::vector<Rational>& lambda) {
  check_degree(params, q);
  return dual_evaluator(params, lambda).boundary(q).map([](const Dual<Rational>& x) { return x.b; });
}

std::vector<Matrix<Rational>> all_boundaries(const ArrangementParams& params,
                                             const std::vector<Rational>& t) {
  auto ev = rational_evaluator(params, t);
  std::vector<Matrix<Rational>> out;
  for (int q = 1; q <= params.rank(); ++q) out.push_back(ev.boundary(q));
  return out;
}

std::vector<Matrix<Fp>> all_boundaries(const ArrangementParams& params, const std::vector<Fp>& t) {
  auto ev = fp_evaluator(params, t);
  std::vector<Matrix<Fp>> out;
  for (int q = 1; q <= params.rank(); ++q) out.push_back(ev.boundary(q));
  return out;
}

std::vector<Matrix<Rational>> all_boundary_derivatives(const ArrangementParams& params,
                                                       const std::vector<Rational>& lambda) {
  auto ev = dual_evaluator(params, lambda);
  std::vector<Matrix<Rational>> out;
  for (int q = 1; q <= params.rank(); ++q)
    out.push_back(ev.boundary(q).map([](const Dual<Rational>& x) { return x.b; }));
  return out;
}

Matrix<Rational> cochain_matrix(const ArrangementParams& params, int q, const std::vector<Rational>& t) {
  if (q < 0 || q >= params.rank()) throw DomainError("cochain degree out of range: " + std::to_string(q));
  return cochain_from_boundary(q, boundary_eval(params, q + 1, t));
}

Matrix<Fp> cochain_matrix(const ArrangementParams& params, int q, const std::vector<Fp>& t) {
  if (q < 0 || q >= params.rank()) throw DomainError("cochain degree out of range: " + std::to_string(q));
  return cochain_from_boundary(q, boundary_eval(params, q + 1, t));
}

namespace {

// D_q = ell copies of C^_q, indexed by i_1; the resolution order runs over J
// first, so this maps each D-row to its copy-major position.
std::vector<std::size_t> copy_major(int n, int ell, int degree) {
  std::vector<std::size_t> perm;
  if (degree < 1) return perm;
  const auto hat_pos = basis_positions(enumerate_basis(n, ell + 1, degree - 1));
  const std::size_t hat_dim = ResolutionLayout(n, ell + 1).dim(degree - 1);
  for (const auto& b : enumerate_basis(n, ell, degree)) {
    if (b.J.front() != ell + 1) break;
    const BasisIndex rest{{b.I.begin() + 1, b.I.end()}, {b.J.begin() + 1, b.J.end()}};
    perm.push_back(static_cast<std::size_t>(b.I.front() - 1) * hat_dim + hat_pos.at(rest));
  }
  return perm;
}

template <class T>
struct ConeBlocks {
  Matrix<T> upper_left, upper_right, lower_left, lower_right;
  bool lower_left_zero = false, hat_matches = false, d_matches = false;
};

// full = d_{q+1} of A(n, ell); hat_next = d_{q+1}, hat_q = d_q of A(n, ell+1),
// each passed as a callback since the degrees may be out of range.
template <class T, class HatFn>
ConeBlocks<T> split_cone(int n, int ell, int q, const Matrix<T>& full, HatFn&& hat_boundary) {
  const ResolutionLayout hat(n, ell + 1);
  const std::size_t d_rows = static_cast<std::size_t>(ell) * hat.dim(q);
  const std::size_t d_cols = q >= 1 ? static_cast<std::size_t>(ell) * hat.dim(q - 1) : 0;
  const std::size_t hat_rows = hat.dim(q + 1), hat_cols = hat.dim(q);
  if (d_rows + hat_rows != full.rows() || d_cols + hat_cols != full.cols())
    throw InvariantError("mapping cone blocks do not tile the boundary matrix");

  ConeBlocks<T> out;
  out.upper_left = full.block(0, 0, d_rows, d_cols);
  out.upper_right = full.block(0, d_cols, d_rows, hat_cols);
  out.lower_left = full.block(d_rows, 0, hat_rows, d_cols);
  out.lower_right = full.block(d_rows, d_cols, hat_rows, hat_cols);
  out.lower_left_zero = out.lower_left.is_zero_matrix();

  Matrix<T> hat_next(hat_rows, hat_cols);
  if (hat_rows > 0) hat_next = hat_boundary(q + 1);
  out.hat_matches = out.lower_right == hat_next;

  Matrix<T> hat_q(hat.dim(q), q >= 1 ? hat.dim(q - 1) : 0);
  if (q >= 1 && hat.dim(q) > 0) hat_q = hat_boundary(q);
  const auto row_perm = copy_major(n, ell, q + 1), col_perm = copy_major(n, ell, q);
  Matrix<T> reordered(d_rows, d_cols);
  for (std::size_t r = 0; r < d_rows; ++r)
    for (std::size_t c = 0; c < d_cols; ++c) reordered(row_perm[r], col_perm[c]) = out.upper_left(r, c);
  out.d_matches = reordered == direct_sum_power(hat_q, static_cast<std::size_t>(ell));
  return out;
}

void check_cone_degree(const ArrangementParams& params, int q) {
  if (q < 0 || q >= params.rank()) throw DomainError("mapping cone degree out of range: " + std::to_string(q));
}

}  // namespace

MappingConeReport mapping_cone_blocks(const ArrangementParams& params, int q) {
  check_cone_degree(params, q);
  const int n = params.n(), ell = params.ell();
  auto b = split_cone<GroupRingElement>(n, ell, q, assemble_boundary(params, q + 1),
                                        [&](int k) { return assemble_boundary(n, ell + 1, k); });
  MappingConeReport rep;
  rep.q = q;
  rep.upper_left = std::move(b.upper_left);
  rep.upper_right = std::move(b.upper_right);
  rep.lower_left = std::move(b.lower_left);
  rep.lower_right = std::move(b.lower_right);
  rep.lower_left_zero = b.lower_left_zero;
  rep.hat_matches = b.hat_matches;
  rep.d_matches = b.d_matches;
  return rep;
}

MappingConeCheck mapping_cone_check(const ArrangementParams& params, int q, const std::vector<Rational>& t) {
  check_cone_degree(params, q);
  const int n = params.n(), ell = params.ell();
  auto ev = rational_evaluator(params, t);
  // A(n, ell+1) drops the ell coordinates with j = ell+1, which lead the pair order.
  const std::vector<Rational> t_hat(t.begin() + ell, t.end());
  std::vector<Rational> inv_hat;
  for (const auto& x : t_hat) inv_hat.push_back(1 / x);
  BoundaryEvaluator<Rational> hat_ev(n, ell + 1, t_hat, inv_hat, [](const Rational& c) { return c; });
  const auto b = split_cone<Rational>(n, ell, q, ev.boundary(q + 1), [&](int k) { return hat_ev.boundary(k); });
  return {q, b.lower_left_zero, b.hat_matches, b.d_matches};
}

}  // namespace discoh
