#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "discoh/params.hpp"

namespace discoh {

/// nbc basis element a_{I,J} = a_{i_1,j_1} ^ ... ^ a_{i_q,j_q}.
/// The empty index (q = 0) is the unit.
struct BasisIndex {
  std::vector<int> I;
  std::vector<int> J;

  std::size_t degree() const { return J.size(); }

  /// J lexicographic first, then I lexicographic.
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    if (a.J != b.J) return a.J < b.J;
    return a.I < b.I;
  }
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) = default;
};

/// Degree-q basis in the canonical order. Works for the degenerate level
/// ell == n as well (only the unit survives), which the recursions need.
std::vector<BasisIndex> enumerate_basis(int n, int ell, int q);
std::vector<BasisIndex> enumerate_basis(const ArrangementParams& params, int q);

/// dim A^q for q = 0..n-ell.
std::vector<std::size_t> degree_dims(const ArrangementParams& params);

/// d_J = (j_1 - 1)...(j_q - 1).
std::size_t module_rank(const std::vector<int>& J);

/// Reverse lookup for a basis listing.
std::map<BasisIndex, std::size_t> basis_positions(const std::vector<BasisIndex>& basis);

/// All increasing subsets of [lo, hi] of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int lo, int hi, int size);

/// Position-indexed admissible tuple. Both positions and values are 1-based;
/// positions are increasing and end at q = |J|.
struct AdmissibleSet {
  std::vector<int> positions;
  std::vector<int> values;
  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

/// Direct predicate: checks the chain conditions for (I, J) relative to the
/// distinguished hyperplane (m, ell+1), plus 1 <= k < j and k != i.
bool is_admissible(const std::vector<int>& I, const std::vector<int>& J, int m, int ell,
                   const AdmissibleSet& K);

/// Every admissible K, ordered by positions (lexicographic). Values are forced
/// by the chain condition, so each position set contributes at most one K.
std::vector<AdmissibleSet> admissible_sets(const std::vector<int>& I, const std::vector<int>& J,
                                           int m, int ell);

}  // namespace discoh
