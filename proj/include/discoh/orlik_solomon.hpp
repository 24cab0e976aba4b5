#pragma once

#include <map>
#include <vector>

#include "discoh/combinatorics.hpp"
#include "discoh/matrix.hpp"
#include "discoh/params.hpp"
#include "discoh/scalar.hpp"

namespace discoh {

/// Weight vector lambda, one rational per hyperplane in the global pair order.
using WeightVector = std::vector<Rational>;

/// Throws DomainError unless w has exactly N entries.
void check_length(const ArrangementParams& params, std::size_t size, const char* what);

/// Homogeneous element of A^q in the nbc basis; zero coefficients are never stored.
class OSElement {
 public:
  explicit OSElement(int degree = 0) : degree_(degree) {}
  static OSElement unit() {
    OSElement e(0);
    e.add({{}, {}}, Rational(1));
    return e;
  }
  static OSElement generator(const Pair& p);

  int degree() const { return degree_; }
  const std::map<BasisIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisIndex& b) const;

  void add(const BasisIndex& b, const Rational& c);
  OSElement& operator+=(const OSElement& o);
  friend OSElement operator*(const Rational& s, OSElement e);
  friend bool operator==(const OSElement&, const OSElement&) = default;

 private:
  int degree_;
  std::map<BasisIndex, Rational> terms_;
};

/// Straightens a_{f_1} ^ ... ^ a_{f_q} (times sign) into the nbc basis.
OSElement normal_form(const ArrangementParams& params, const std::vector<Pair>& factors,
                      int sign = 1);

OSElement wedge(const ArrangementParams& params, const OSElement& x, const OSElement& y);

/// omega = sum lambda_{i,j} a_{i,j}.
OSElement omega(const ArrangementParams& params, const WeightVector& lambda);

/// Matrix of mu^q(lambda) : A^q -> A^{q+1}; rows index A^{q+1}, columns A^q,
/// both in enumerate_basis order. Computed by wedging with omega.
Matrix<Rational> mu_naive(const ArrangementParams& params, int q, const WeightVector& lambda);

/// Same matrix assembled from the B / A-hat block recursion and the explicit
/// admissible-set coefficients, without any wedge products.
Matrix<Rational> mu_closed_form(const ArrangementParams& params, int q, const WeightVector& lambda);

}  // namespace discoh
