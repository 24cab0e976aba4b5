#include "discoh/fox.hpp"

#include <map>
#include <mutex>

namespace discoh {

Word artin_act(const Letter& b, const Letter& target) {
  const int r = b.gen.i, s = b.gen.j;
  const int i = target.gen.i, j = target.gen.j;
  if (s >= j) return Word({target});
  const Word x = Word::generator(i, j);
  const Word xr = Word::generator(r, j), xs = Word::generator(s, j);
  Word image;
  if (i == r || i == s) {
    const Word z = xr * xs;
    image = b.exp > 0 ? z * x * z.inverse() : z.inverse() * x * z;
  } else if (r < i && i < s) {
    const Word c = commutator(xr, xs);
    if (b.exp > 0) {
      image = c * x * c.inverse();
    } else {
      const Word z = xr * xs;
      const Word w = z.inverse() * c * z;
      image = w.inverse() * x * w;
    }
  } else {
    image = x;
  }
  return target.exp > 0 ? image : image.inverse();
}

Word artin_act(const Pair& gen, const Pair& target) {
  return artin_act(Letter{gen, 1}, Letter{target, 1});
}

Word act(const Word& braid, const Word& w) {
  Word cur = w;
  for (const auto& b : braid.letters()) {
    Word next;
    for (const auto& x : cur.letters()) next = next * artin_act(b, x);
    cur = std::move(next);
  }
  return cur;
}

GroupRingElement act(const Word& braid, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) out.add(act(braid, w), c);
  return out;
}

GroupRingElement fox_derivative(const Word& w, const Pair& gen) {
  GroupRingElement out;
  Word prefix;
  for (const auto& x : w.letters()) {
    if (x.gen.j != gen.j)
      throw DomainError("word letter " + to_string(x.gen) + " lies outside G_" + std::to_string(gen.j));
    if (x.gen == gen) {
      if (x.exp > 0) {
        out.add(prefix, Rational(1));
      } else {
        Word with = prefix;
        with.push_back(x);
        out.add(with, Rational(-1));
      }
    }
    prefix.push_back(x);
  }
  return out;
}

GRMatrix jacobian(const Word& braid, int j) {
  GRMatrix m(j - 1, j - 1);
  for (int i = 1; i < j; ++i) {
    const Word image = act(braid, Word::generator(i, j));
    for (int k = 1; k < j; ++k) m(i - 1, k - 1) = fox_derivative(image, {k, j});
  }
  return m;
}

const GRMatrix& rho_letter(const Letter& x, int j) {
  static std::mutex mtx;
  static std::map<std::pair<Letter, int>, GRMatrix> cache;
  std::lock_guard<std::mutex> lock(mtx);
  const auto key = std::make_pair(x, j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  GRMatrix m;
  if (x.gen.j >= j) {
    m = GRMatrix::identity(j - 1);
  } else {
    const Word w({x});
    m = GroupRingElement(w) * jacobian(w, j);
  }
  return cache.emplace(key, std::move(m)).first->second;
}

GRMatrix rho_matrix(const Word& braid, int j) {
  GRMatrix m = GRMatrix::identity(j - 1);
  for (const auto& x : braid.letters())
    if (x.gen.j < j) m = m * rho_letter(x, j);
  return m;
}

GRMatrix rho_tilde(const GroupRingElement& x, int j) {
  GRMatrix out(j - 1, j - 1);
  for (const auto& [w, c] : x.terms()) out += GroupRingElement(Word(), c) * rho_matrix(w, j);
  return out;
}

GRMatrix rho_tilde(const GRMatrix& m, int j) {
  const std::size_t k = static_cast<std::size_t>(j - 1);
  GRMatrix out(m.rows() * k, m.cols() * k);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) out.set_block(r * k, c * k, rho_tilde(m(r, c), j));
  return out;
}

Matrix<Rational> rho_derivative(const ArrangementParams& params, const Word& braid, int j,
                                const std::vector<Rational>& lambda) {
  return derivative_matrix(params, rho_matrix(braid, j), lambda);
}

Word collect(const Word& w) {
  std::map<int, Word> blocks;
  for (const auto& b : w.letters()) {
    for (auto it = blocks.upper_bound(b.gen.j); it != blocks.end(); ++it)
      it->second = act(Word({b}), it->second);
    blocks[b.gen.j].push_back(b);
  }
  Word out;
  for (const auto& [j, block] : blocks) out = out * block;
  return out;
}

GroupRingElement collect(const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) out.add(collect(w), c);
  return out;
}

GRMatrix collect(const GRMatrix& m) {
  return m.map([](const GroupRingElement& x) { return collect(x); });
}

}  // namespace discoh
