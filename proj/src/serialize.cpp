#include "discoh/serialize.hpp"

#include <sstream>

namespace discoh {

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json index_json(const BasisIndex& b) { return Json{{"I", b.I}, {"J", b.J}}; }

}  // namespace

Json matrix_to_json(int n, int ell, int q, const Matrix<Rational>& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) entries.push_back(Json::array({r, c, to_string(m(r, c))}));
  return Json{{"n", n}, {"ell", ell}, {"q", q}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

MatrixRecord matrix_from_json(const Json& j) {
  MatrixRecord rec;
  rec.n = j.at("n").get<int>();
  rec.ell = j.at("ell").get<int>();
  rec.q = j.at("q").get<int>();
  rec.matrix = Matrix<Rational>(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
    if (r >= rec.matrix.rows() || c >= rec.matrix.cols()) throw DomainError("matrix entry out of range");
    rec.matrix(r, c) = parse_rational(e.at(2).get<std::string>());
  }
  return rec;
}

Json grmatrix_to_json(int n, int ell, int q, const GRMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c))) continue;
      Json terms = Json::array();
      for (const auto& [w, coef] : m(r, c).terms()) {
        Json letters = Json::array();
        for (const auto& x : w.letters()) letters.push_back(Json::array({x.gen.i, x.gen.j, x.exp}));
        terms.push_back(Json::array({to_string(coef), letters}));
      }
      entries.push_back(Json::array({r, c, terms}));
    }
  return Json{{"n", n}, {"ell", ell}, {"q", q}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

GRMatrix grmatrix_from_json(const Json& j) {
  GRMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    GroupRingElement x;
    for (const auto& term : e.at(2)) {
      std::vector<Letter> letters;
      for (const auto& l : term.at(1)) letters.push_back({{l.at(0).get<int>(), l.at(1).get<int>()}, l.at(2).get<int>()});
      x.add(Word(letters), parse_rational(term.at(0).get<std::string>()));
    }
    m(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) = x;
  }
  return m;
}

Json basis_to_json(const std::vector<BasisIndex>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back(index_json(b));
  return out;
}

Json betti_to_json(const BettiReport& r) {
  Json prov = Json::object();
  for (const auto& [k, v] : r.provenance) prov[k] = v;
  Json out{{"n", r.n}, {"ell", r.ell}, {"dims", r.dims}, {"betti", r.betti}, {"euler", r.euler}, {"provenance", prov}};
  if (r.consensus) {
    Json per = Json::array();
    for (std::size_t i = 0; i < r.consensus->primes.size(); ++i)
      per.push_back(Json{{"p", r.consensus->primes[i]}, {"betti", r.consensus->per_prime[i].betti}});
    out["consensus"] = Json{{"estimate", r.consensus->estimate}, {"agree", r.consensus->agree}, {"per_prime", per}};
  }
  return out;
}

BettiReport betti_from_json(const Json& j) {
  BettiReport r;
  r.n = j.value("n", 0);
  r.ell = j.value("ell", 0);
  r.dims = j.at("dims").get<std::vector<std::size_t>>();
  r.betti = j.at("betti").get<std::vector<std::size_t>>();
  r.euler = j.at("euler").get<long>();
  for (const auto& [k, v] : j.at("provenance").items()) r.provenance[k] = v.get<std::string>();
  if (j.contains("consensus")) {
    ConsensusReport c;
    c.estimate = j["consensus"].at("estimate").get<std::vector<std::size_t>>();
    c.agree = j["consensus"].at("agree").get<bool>();
    for (const auto& p : j["consensus"].at("per_prime")) {
      c.primes.push_back(p.at("p").get<std::uint64_t>());
      BettiNumbers b;
      b.dims = r.dims;
      b.betti = p.at("betti").get<std::vector<std::size_t>>();
      b.euler = r.euler;
      c.per_prime.push_back(b);
    }
    r.consensus = c;
  }
  return r;
}

Json linearization_to_json(const LinearizationReport& r) {
  Json out{{"n", r.n}, {"ell", r.ell}, {"directions_checked", r.directions_checked},
           {"degree_equal", r.degree_equal}, {"ok", r.ok()}};
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    out["mismatch"] = Json{{"q", m.q},
                           {"direction", m.direction},
                           {"source", m.source},
                           {"row", index_json(m.row)},
                           {"col", index_json(m.col)},
                           {"expected", to_string(m.expected)},
                           {"actual", to_string(m.actual)}};
  }
  return out;
}

Json probe_to_json(const TangentConeProbe& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows)
    rows.push_back(Json{{"u", to_string(r.u)}, {"dim_H", r.dim_hk}, {"trivial", r.trivial}});
  return Json{{"k", p.k},           {"m", p.m},         {"lambda", strings(p.lambda)},
              {"member", p.member}, {"samples", rows},  {"agrees", p.agrees},
              {"caveat", "agreement is checked only at the sampled u"}};
}

Json scan_to_json(const ArrangementParams& params, const ScanResult& s) {
  Json records = Json::array();
  for (const auto& r : s.records)
    records.push_back(Json{{"lambda", strings(r.lambda)}, {"betti", r.betti}, {"member", r.member}});
  Json groups = Json::array();
  for (const auto& g : s.groups)
    groups.push_back(Json{{"members", g.members}, {"span_dim", g.span_dim}, {"closed", g.closed}});
  return Json{{"n", params.n()}, {"ell", params.ell()}, {"k", s.k}, {"m", s.m}, {"seed", s.seed},
              {"records", records}, {"groups", groups}};
}

Json sandwich_to_json(const SandwichReport& s) {
  return Json{{"dims", s.dims},
              {"os_betti", s.os_betti},
              {"local_betti", s.local_betti},
              {"holds", s.holds},
              {"ok", s.ok()},
              {"local", betti_to_json(s.local)}};
}

std::string scan_to_csv(const ArrangementParams& params, const ScanResult& s) {
  std::ostringstream out;
  for (const auto& p : hyperplane_pairs(params)) out << "lambda_" << p.i << "_" << p.j << ",";
  out << "k,m,member,b_k\n";
  for (const auto& r : s.records) {
    for (const auto& x : r.lambda) out << to_string(x) << ",";
    out << s.k << "," << s.m << "," << (r.member ? 1 : 0) << "," << r.betti[static_cast<std::size_t>(s.k)] << "\n";
  }
  return out.str();
}

}  // namespace discoh
