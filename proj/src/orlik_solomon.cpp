#include "discoh/orlik_solomon.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "discoh/errors.hpp"

namespace discoh {

void check_length(const ArrangementParams& params, std::size_t size, const char* what) {
  if (size != params.hyperplane_count())
    throw DomainError(std::string(what) + " has " + std::to_string(size) + " entries, expected N=" +
                      std::to_string(params.hyperplane_count()));
}

OSElement OSElement::generator(const Pair& p) {
  OSElement e(1);
  e.add({{p.i}, {p.j}}, Rational(1));
  return e;
}

Rational OSElement::coefficient(const BasisIndex& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void OSElement::add(const BasisIndex& b, const Rational& c) {
  if (static_cast<int>(b.degree()) != degree_) throw InvariantError("degree mismatch in OSElement");
  if (discoh::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (discoh::is_zero(it->second)) terms_.erase(it);
  }
}

OSElement& OSElement::operator+=(const OSElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

OSElement operator*(const Rational& s, OSElement e) {
  if (discoh::is_zero(s)) return OSElement(e.degree());
  for (auto& [b, c] : e.terms_) c *= s;
  return e;
}

namespace {

void straighten(const ArrangementParams& params, std::vector<Pair> f, int sign, OSElement& out) {
  // Sort by j with adjacent swaps; factors sharing j keep their order.
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b + 1 < f.size() - a; ++b)
      if (f[b].j > f[b + 1].j) {
        std::swap(f[b], f[b + 1]);
        sign = -sign;
      }
  for (std::size_t p = 0; p + 1 < f.size(); ++p) {
    if (f[p].j != f[p + 1].j) continue;
    const int i = f[p].i, ip = f[p + 1].i, k = f[p].j;
    if (i == ip) return;
    const int r = std::min(i, ip), s = std::max(i, ip);
    if (s <= params.ell()) return;
    // a_{i,k} a_{i',k} = a_{r,s} a_{i',k} - a_{r,s} a_{i,k}
    auto g = f;
    g[p] = {r, s};
    g[p + 1] = {ip, k};
    straighten(params, g, sign, out);
    g[p + 1] = {i, k};
    straighten(params, g, -sign, out);
    return;
  }
  BasisIndex b;
  for (const auto& x : f) {
    b.I.push_back(x.i);
    b.J.push_back(x.j);
  }
  out.add(b, Rational(sign));
}

}  // namespace

OSElement normal_form(const ArrangementParams& params, const std::vector<Pair>& factors, int sign) {
  for (const auto& f : factors) params.coordinate(f);  // validates
  OSElement out(static_cast<int>(factors.size()));
  if (static_cast<int>(factors.size()) > params.rank()) return out;
  straighten(params, factors, sign, out);
  return out;
}

OSElement wedge(const ArrangementParams& params, const OSElement& x, const OSElement& y) {
  OSElement out(x.degree() + y.degree());
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) {
      std::vector<Pair> f;
      for (std::size_t p = 0; p < bx.degree(); ++p) f.push_back({bx.I[p], bx.J[p]});
      for (std::size_t p = 0; p < by.degree(); ++p) f.push_back({by.I[p], by.J[p]});
      out += (cx * cy) * normal_form(params, f);
    }
  return out;
}

OSElement omega(const ArrangementParams& params, const WeightVector& lambda) {
  check_length(params, lambda.size(), "weight vector");
  OSElement w(1);
  const auto pairs = hyperplane_pairs(params);
  for (std::size_t c = 0; c < pairs.size(); ++c) w.add({{pairs[c].i}, {pairs[c].j}}, lambda[c]);
  return w;
}

namespace {

// Integer structure constants of left multiplication by each a_c on A^q:
// entries (row, col, coordinate, coefficient).
struct MuStructure {
  std::size_t rows = 0, cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> entries;
};

const MuStructure& mu_structure(const ArrangementParams& params, int q) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int>, MuStructure> cache;
  std::lock_guard<std::mutex> lock(mtx);
  const auto key = std::make_tuple(params.n(), params.ell(), q);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  MuStructure s;
  const auto dom = enumerate_basis(params, q);
  const auto cod = enumerate_basis(params, q + 1);
  const auto pos = basis_positions(cod);
  const auto pairs = hyperplane_pairs(params);
  s.rows = cod.size();
  s.cols = dom.size();
  for (std::size_t col = 0; col < dom.size(); ++col)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      std::vector<Pair> f{pairs[c]};
      for (std::size_t p = 0; p < dom[col].degree(); ++p) f.push_back({dom[col].I[p], dom[col].J[p]});
      const auto image = normal_form(params, f);
      for (const auto& [b, coef] : image.terms())
        s.entries.emplace_back(pos.at(b), col, c, coef.get_num().get_si());
    }
  return cache.emplace(key, std::move(s)).first->second;
}

}  // namespace

Matrix<Rational> mu_naive(const ArrangementParams& params, int q, const WeightVector& lambda) {
  check_length(params, lambda.size(), "weight vector");
  if (q < 0 || q > params.rank()) throw DomainError("degree out of range: " + std::to_string(q));
  const auto& s = mu_structure(params, q);
  Matrix<Rational> m(s.rows, s.cols);
  for (const auto& [r, c, coord, coef] : s.entries) m(r, c) += coef * lambda[coord];
  return m;
}

namespace {

// Recursive block assembly at level `ell` (ell == n allowed). `lam(i, j)`
// reads the weight of H_{i,j}.
class ClosedForm {
 public:
  ClosedForm(int n, const ArrangementParams& params, const WeightVector& lambda)
      : n_(n), params_(params), lambda_(lambda) {}

  Matrix<Rational> build(int ell, int q) {
    const auto dom = enumerate_basis(n_, ell, q);
    const auto cod = enumerate_basis(n_, ell, q + 1);
    Matrix<Rational> m(cod.size(), dom.size());
    if (dom.empty() || cod.empty()) return m;
    if (q == 0) {
      for (std::size_t r = 0; r < cod.size(); ++r) m(r, 0) = lam(cod[r].I[0], cod[r].J[0]);
      return m;
    }
    const auto pos = basis_positions(cod);
    const int first = ell + 1;
    // B columns: J starts with ell+1.
    const auto hat_prev = build(ell + 1, q - 1);
    const auto hat_prev_dom = enumerate_basis(n_, ell + 1, q - 1);
    const auto hat_prev_cod = enumerate_basis(n_, ell + 1, q);
    const auto hat_prev_dom_pos = basis_positions(hat_prev_dom);
    // A-hat columns.
    const auto hat = build(ell + 1, q);
    const auto hat_dom_pos = basis_positions(enumerate_basis(n_, ell + 1, q));
    const auto hat_cod = enumerate_basis(n_, ell + 1, q + 1);

    for (std::size_t col = 0; col < dom.size(); ++col) {
      const auto& b = dom[col];
      if (b.J[0] == first) {
        const int i = b.I[0];
        const BasisIndex tail{{b.I.begin() + 1, b.I.end()}, {b.J.begin() + 1, b.J.end()}};
        const std::size_t hc = hat_prev_dom_pos.at(tail);
        for (std::size_t hr = 0; hr < hat_prev_cod.size(); ++hr) {
          const Rational& e = hat_prev(hr, hc);
          if (is_zero(e)) continue;
          BasisIndex row{{i}, {first}};
          row.I.insert(row.I.end(), hat_prev_cod[hr].I.begin(), hat_prev_cod[hr].I.end());
          row.J.insert(row.J.end(), hat_prev_cod[hr].J.begin(), hat_prev_cod[hr].J.end());
          m(pos.at(row), col) -= e;
        }
        continue;
      }
      const std::size_t hc = hat_dom_pos.at(b);
      for (std::size_t hr = 0; hr < hat_cod.size(); ++hr) {
        const Rational& e = hat(hr, hc);
        if (!is_zero(e)) m(pos.at(hat_cod[hr]), col) += e;
      }
      for (int mm = 1; mm <= ell; ++mm) {
        for (const auto& [R, coef] : psi_column(b, mm, ell)) {
          BasisIndex row{{mm}, {first}};
          row.I.insert(row.I.end(), R.begin(), R.end());
          row.J.insert(row.J.end(), b.J.begin(), b.J.end());
          m(pos.at(row), col) += coef;
        }
      }
    }
    return m;
  }

 private:
  Rational lam(int i, int j) const { return lambda_[params_.coordinate({i, j})]; }

  // Coefficients Lambda^J_{R,I} of a_{m,ell+1} ^ a_{R,J} in the image of a_{I,J}.
  std::map<std::vector<int>, Rational> psi_column(const BasisIndex& b, int m, int ell) const {
    std::map<std::vector<int>, Rational> col;
    col[b.I] += lam(m, ell + 1);
    const int q = static_cast<int>(b.degree());
    for (int p = 1; p <= q; ++p) {
      const std::vector<int> Ip(b.I.begin(), b.I.begin() + p);
      const std::vector<int> Jp(b.J.begin(), b.J.begin() + p);
      for (const auto& K : admissible_sets(Ip, Jp, m, ell)) {
        const Rational w = lam(K.values.back(), b.J[p - 1]);
        const std::size_t t = K.positions.size();
        // Each subset D of the positions replaces i_d by k_d with sign (-1)^|D|.
        for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
          auto R = b.I;
          int sign = 1;
          for (std::size_t d = 0; d < t; ++d)
            if (mask >> d & 1) {
              R[K.positions[d] - 1] = K.values[d];
              sign = -sign;
            }
          if (sign > 0) col[R] += w;
          else col[R] -= w;
        }
      }
    }
    return col;
  }

  int n_;
  const ArrangementParams& params_;
  const WeightVector& lambda_;
};

}  // namespace

Matrix<Rational> mu_closed_form(const ArrangementParams& params, int q, const WeightVector& lambda) {
  check_length(params, lambda.size(), "weight vector");
  if (q < 0 || q > params.rank()) throw DomainError("degree out of range: " + std::to_string(q));
  ClosedForm cf(params.n(), params, lambda);
  return cf.build(params.ell(), q);
}

}  // namespace discoh
