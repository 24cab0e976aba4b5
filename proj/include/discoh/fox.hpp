#pragma once

#include <vector>

#include "discoh/group_ring.hpp"
#include "discoh/params.hpp"

namespace discoh {

/// Image of a letter of G_j under the automorphism of a single braid letter
/// gamma_{r,s}^{+-1}. Trivial when s >= j. The positive letter conjugates
/// gamma_{i,j} by z_i = gamma_{r,j} gamma_{s,j} (i in {r,s}) or by the
/// commutator [gamma_{r,j}, gamma_{s,j}] (r < i < s).
Word artin_act(const Letter& braid_letter, const Letter& target);
Word artin_act(const Pair& gen, const Pair& target);

/// Right action of a braid word: letters act left to right, so the
/// automorphism of b_1 b_2 is "apply b_1, then b_2".
Word act(const Word& braid, const Word& w);
GroupRingElement act(const Word& braid, const GroupRingElement& x);

/// Fox derivative d w / d gen. All letters of w must lie in G_{gen.j}.
GroupRingElement fox_derivative(const Word& w, const Pair& gen);

/// (j-1)x(j-1) matrix with entry (i, k) = d braid(gamma_{i,j}) / d gamma_{k,j}.
GRMatrix jacobian(const Word& braid, int j);

/// rho_j(braid): the product of rho_j over the letters, with
/// rho_j(gamma_{r,s}^{+-1}) = gamma^{+-1} * J(gamma^{+-1}) for s < j and the
/// identity otherwise.
GRMatrix rho_matrix(const Word& braid, int j);
/// rho_j of a single letter; cached.
const GRMatrix& rho_letter(const Letter& x, int j);

/// Extension of rho_j to the group ring, and entrywise to matrices (each
/// entry becomes a (j-1)x(j-1) block).
GRMatrix rho_tilde(const GroupRingElement& x, int j);
GRMatrix rho_tilde(const GRMatrix& m, int j);

/// Derivative at t = 1 of t -> rho_j(braid)(t), in direction lambda.
Matrix<Rational> rho_derivative(const ArrangementParams& params, const Word& braid, int j,
                                const std::vector<Rational>& lambda);

/// Normal form of a group element of P_{n,ell} = G_n x| ... x| G_{ell+1}:
/// the product w_{low} ... w_{high} of reduced words with w_j in G_j.
/// Two words represent the same element iff their normal forms agree.
Word collect(const Word& w);
GroupRingElement collect(const GroupRingElement& x);
GRMatrix collect(const GRMatrix& m);

}  // namespace discoh
