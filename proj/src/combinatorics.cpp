#include "discoh/combinatorics.hpp"

#include <algorithm>

#include "discoh/errors.hpp"

namespace discoh {

std::vector<std::vector<int>> subsets(int lo, int hi, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

std::vector<BasisIndex> enumerate_basis(int n, int ell, int q) {
  std::vector<BasisIndex> out;
  if (q < 0) throw DomainError("degree must be non-negative");
  for (const auto& J : subsets(ell + 1, n, q)) {
    // odometer over I with i_1 slowest
    std::vector<int> I(J.size(), 1);
    while (true) {
      out.push_back({I, J});
      int p = static_cast<int>(J.size()) - 1;
      while (p >= 0 && I[p] == J[p] - 1) {
        I[p] = 1;
        --p;
      }
      if (p < 0) break;
      ++I[p];
    }
  }
  return out;
}

std::vector<BasisIndex> enumerate_basis(const ArrangementParams& params, int q) {
  return enumerate_basis(params.n(), params.ell(), q);
}

std::vector<std::size_t> degree_dims(const ArrangementParams& params) {
  // coefficients of prod_{j=ell+1}^{n} (1 + (j-1)t)
  std::vector<std::size_t> c{1};
  for (int j = params.ell() + 1; j <= params.n(); ++j) {
    std::vector<std::size_t> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] += c[k] * static_cast<std::size_t>(j - 1);
    }
    c = std::move(next);
  }
  return c;
}

std::size_t module_rank(const std::vector<int>& J) {
  std::size_t d = 1;
  for (int j : J) d *= static_cast<std::size_t>(j - 1);
  return d;
}

std::map<BasisIndex, std::size_t> basis_positions(const std::vector<BasisIndex>& basis) {
  std::map<BasisIndex, std::size_t> pos;
  for (std::size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k], k);
  return pos;
}

namespace {

bool same_pair_set(int a, int b, int c, int d) {
  return (a == c && b == d) || (a == d && b == c);
}

}  // namespace

bool is_admissible(const std::vector<int>& I, const std::vector<int>& J, int m, int ell,
                   const AdmissibleSet& K) {
  const int q = static_cast<int>(J.size());
  if (I.size() != J.size() || q == 0) return false;
  if (K.positions.empty() || K.positions.size() != K.values.size()) return false;
  if (K.positions.back() != q) return false;
  for (std::size_t p = 0; p < K.positions.size(); ++p) {
    const int s = K.positions[p];
    if (s < 1 || s > q) return false;
    if (p > 0 && s <= K.positions[p - 1]) return false;
    const int i = I[s - 1];
    const int j = J[s - 1];
    const int k = K.values[p];
    if (k < 1 || k >= j || k == i) return false;
    if (p == 0) {
      if (!same_pair_set(k, i, m, ell + 1)) return false;
    } else {
      const int sp = K.positions[p - 1];
      if (!same_pair_set(k, i, K.values[p - 1], J[sp - 1])) return false;
    }
  }
  return true;
}

std::vector<AdmissibleSet> admissible_sets(const std::vector<int>& I, const std::vector<int>& J,
                                           int m, int ell) {
  std::vector<AdmissibleSet> out;
  const int q = static_cast<int>(J.size());
  if (q == 0 || I.size() != J.size()) return out;
  // Position sets ending at q, grouped by size, each size lexicographic; then
  // sorted so the listing is lexicographic on positions overall.
  std::vector<std::vector<int>> position_sets;
  for (int t = 0; t < q; ++t)
    for (auto s : subsets(1, q - 1, t)) {
      s.push_back(q);
      position_sets.push_back(std::move(s));
    }
  std::sort(position_sets.begin(), position_sets.end());
  for (const auto& P : position_sets) {
    AdmissibleSet K{P, {}};
    bool ok = true;
    for (std::size_t p = 0; p < P.size() && ok; ++p) {
      const int i = I[P[p] - 1];
      int a, b;  // the pair {k, i} must equal {a, b}
      if (p == 0) {
        a = m;
        b = ell + 1;
      } else {
        a = K.values[p - 1];
        b = J[P[p - 1] - 1];
      }
      if (i == a) K.values.push_back(b);
      else if (i == b) K.values.push_back(a);
      else ok = false;
    }
    if (ok && is_admissible(I, J, m, ell, K)) out.push_back(std::move(K));
  }
  return out;
}

}  // namespace discoh
