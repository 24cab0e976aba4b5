#include "discoh/params.hpp"

#include "discoh/errors.hpp"

namespace discoh {

std::string to_string(const Pair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

ArrangementParams::ArrangementParams(int n, int ell) : n_(n), ell_(ell) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
  if (ell < 1 || ell > n - 1) {
    throw DomainError("ell must lie in [1, n-1], got ell=" + std::to_string(ell) +
                      " for n=" + std::to_string(n));
  }
  const auto choose2 = [](long k) { return static_cast<std::size_t>(k * (k - 1) / 2); };
  count_ = choose2(n) - choose2(ell);
}

bool ArrangementParams::contains(const Pair& p) const {
  return p.j >= ell_ + 1 && p.j <= n_ && p.i >= 1 && p.i < p.j;
}

std::size_t ArrangementParams::coordinate(const Pair& p) const {
  if (!contains(p)) {
    throw DomainError("pair " + to_string(p) + " is not a hyperplane of A(" + std::to_string(n_) +
                      "," + std::to_string(ell_) + ")");
  }
  // Blocks for j' = ell+1 .. j-1 have j'-1 entries each.
  std::size_t offset = 0;
  for (int jj = ell_ + 1; jj < p.j; ++jj) offset += static_cast<std::size_t>(jj - 1);
  return offset + static_cast<std::size_t>(p.i - 1);
}

std::vector<Pair> hyperplane_pairs(const ArrangementParams& params) {
  std::vector<Pair> out;
  out.reserve(params.hyperplane_count());
  for (int j = params.ell() + 1; j <= params.n(); ++j)
    for (int i = 1; i < j; ++i) out.push_back({i, j});
  return out;
}

}  // namespace discoh
