#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "discoh/matrix.hpp"
#include "discoh/params.hpp"
#include "discoh/scalar.hpp"

namespace discoh {

/// gamma_{i,j}^{exp}, exp = +1 or -1.
struct Letter {
  Pair gen;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.exp <=> b.exp;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators gamma_{i,j}. Empty word = identity.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);
  static Word generator(int i, int j, int exp = 1) { return Word({Letter{{i, j}, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends with free cancellation.
  void push_back(const Letter& x);
  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
std::string to_string(const Word& w);

/// Finite rational combination of words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(int c);  // NOLINT: c times the identity
  explicit GroupRingElement(const Word& w, const Rational& c = Rational(1));

  const std::map<Word, Rational>& terms() const { return terms_; }
  void add(const Word& w, const Rational& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Coefficient sum (value at t = 1).
  Rational augmentation() const;

 private:
  std::map<Word, Rational> terms_;
};

inline bool is_zero(const GroupRingElement& x) { return x.terms().empty(); }
std::string to_string(const GroupRingElement& x);

using GRMatrix = Matrix<GroupRingElement>;

/// Abelianized element: exponent vectors (global pair order) with rational
/// coefficients.
class LaurentPoly {
 public:
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  void add(const std::vector<int>& exponent, const Rational& c);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<std::vector<int>, Rational> terms_;
};

LaurentPoly abelianize(const ArrangementParams& params, const GroupRingElement& x);

/// Substitutes t; coordinates must be invertible. T is Rational or Fp.
Rational eval_at(const LaurentPoly& p, const std::vector<Rational>& t);
Fp eval_at(const LaurentPoly& p, const std::vector<Fp>& t);

/// Directional derivative at t = 1 along lambda: sum_w c_w <exponent(w), lambda>.
Rational derivative_at_one(const LaurentPoly& p, const std::vector<Rational>& lambda);

/// Throws DomainError on a wrong length or a zero coordinate.
void check_torus_point(const ArrangementParams& params, const std::vector<Rational>& t);
void check_torus_point(const ArrangementParams& params, const std::vector<Fp>& t);

Matrix<Rational> eval_matrix(const ArrangementParams& params, const GRMatrix& m,
                             const std::vector<Rational>& t);
Matrix<Rational> derivative_matrix(const ArrangementParams& params, const GRMatrix& m,
                                   const std::vector<Rational>& lambda);

}  // namespace discoh
