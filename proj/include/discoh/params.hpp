#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace discoh {

/// Index pair (i, j) of the hyperplane H_{i,j}, the generator a_{i,j} of the
/// Orlik-Solomon algebra and the pure braid generator gamma_{i,j}.
///
/// Pairs order lexicographically by (j, i). This is the global coordinate
/// order for weight vectors and torus points.
struct Pair {
  int i = 0;
  int j = 0;

  friend constexpr std::strong_ordering operator<=>(const Pair& a, const Pair& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend constexpr bool operator==(const Pair& a, const Pair& b) = default;
};

std::string to_string(const Pair& p);

/// Discriminantal arrangement A(n, ell): n - ell points in the plane with
/// ell punctures. Validated on construction.
class ArrangementParams {
 public:
  ArrangementParams(int n, int ell);

  int n() const { return n_; }
  int ell() const { return ell_; }
  /// Rank of the arrangement, n - ell; also the top degree of every complex.
  int rank() const { return n_ - ell_; }
  /// N = C(n,2) - C(ell,2).
  std::size_t hyperplane_count() const { return count_; }

  /// Position of a pair in the global (j, i) order. Throws DomainError if
  /// the pair is not a hyperplane of this arrangement.
  std::size_t coordinate(const Pair& p) const;
  bool contains(const Pair& p) const;

  friend bool operator==(const ArrangementParams&, const ArrangementParams&) = default;

 private:
  int n_;
  int ell_;
  std::size_t count_;
};

/// All N hyperplane pairs in the global (j, i)-lexicographic order.
std::vector<Pair> hyperplane_pairs(const ArrangementParams& params);

}  // namespace discoh
