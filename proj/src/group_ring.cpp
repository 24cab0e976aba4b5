#include "discoh/group_ring.hpp"

#include <type_traits>

namespace discoh {

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& x : letters) push_back(x);
}

void Word::push_back(const Letter& x) {
  if (x.exp != 1 && x.exp != -1) throw DomainError("letter exponent must be +1 or -1");
  if (!letters_.empty() && letters_.back() == x.inverse()) letters_.pop_back();
  else letters_.push_back(x);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& x : b.letters_) w.push_back(x);
  return w;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& x : w.letters()) {
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(x.gen.i) + "_" + std::to_string(x.gen.j);
    if (x.exp < 0) s += "^-1";
  }
  return s;
}

GroupRingElement::GroupRingElement(int c) { add(Word(), Rational(c)); }

GroupRingElement::GroupRingElement(const Word& w, const Rational& c) { add(w, c); }

void GroupRingElement::add(const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator-(GroupRingElement a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
  return out;
}

Rational GroupRingElement::augmentation() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string to_string(const GroupRingElement& x) {
  if (x.terms().empty()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")" + to_string(w);
  }
  return s;
}

void LaurentPoly::add(const std::vector<int>& exponent, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly abelianize(const ArrangementParams& params, const GroupRingElement& x) {
  LaurentPoly p;
  for (const auto& [w, c] : x.terms()) {
    std::vector<int> e(params.hyperplane_count(), 0);
    for (const auto& l : w.letters()) e[params.coordinate(l.gen)] += l.exp;
    p.add(e, c);
  }
  return p;
}

namespace {

template <class T>
T power(const T& x, const T& xinv, int e) {
  T r(1);
  const T& base = e >= 0 ? x : xinv;
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) r = r * base;
  return r;
}

template <class T>
T eval_impl(const LaurentPoly& p, const std::vector<T>& t) {
  std::vector<T> tinv;
  tinv.reserve(t.size());
  for (const auto& x : t) tinv.push_back(inverse(x));
  T sum(0);
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != t.size()) throw DomainError("torus point has the wrong length");
    T term(1);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term = term * power(t[k], tinv[k], e[k]);
    if constexpr (std::is_same_v<T, Rational>) {
      sum += c * term;
    } else {
      // coefficients are integral in every group-ring element we build
      if (c.get_den() != 1) throw DomainError("non-integral coefficient over a prime field");
      const auto prime = t.empty() ? 0 : t[0].p;
      sum = sum + Fp(c.get_num().get_si(), prime) * term;
    }
  }
  return sum;
}

}  // namespace

Rational eval_at(const LaurentPoly& p, const std::vector<Rational>& t) { return eval_impl(p, t); }
Fp eval_at(const LaurentPoly& p, const std::vector<Fp>& t) { return eval_impl(p, t); }

Rational derivative_at_one(const LaurentPoly& p, const std::vector<Rational>& lambda) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != lambda.size()) throw DomainError("weight vector has the wrong length");
    Rational dot = 0;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) dot += e[k] * lambda[k];
    s += c * dot;
  }
  return s;
}

void check_torus_point(const ArrangementParams& params, const std::vector<Rational>& t) {
  if (t.size() != params.hyperplane_count())
    throw DomainError("torus point has " + std::to_string(t.size()) + " entries, expected N=" +
                      std::to_string(params.hyperplane_count()));
  for (const auto& x : t)
    if (is_zero(x)) throw DomainError("torus point has a zero coordinate");
}

void check_torus_point(const ArrangementParams& params, const std::vector<Fp>& t) {
  if (t.size() != params.hyperplane_count())
    throw DomainError("torus point has " + std::to_string(t.size()) + " entries, expected N=" +
                      std::to_string(params.hyperplane_count()));
  for (const auto& x : t)
    if (is_zero(x)) throw DomainError("torus point has a zero coordinate");
}

Matrix<Rational> eval_matrix(const ArrangementParams& params, const GRMatrix& m,
                             const std::vector<Rational>& t) {
  check_torus_point(params, t);
  return m.map([&](const GroupRingElement& x) { return eval_at(abelianize(params, x), t); });
}

Matrix<Rational> derivative_matrix(const ArrangementParams& params, const GRMatrix& m,
                                   const std::vector<Rational>& lambda) {
  if (lambda.size() != params.hyperplane_count()) throw DomainError("weight vector has the wrong length");
  return m.map([&](const GroupRingElement& x) { return derivative_at_one(abelianize(params, x), lambda); });
}

}  // namespace discoh
