#include "discoh/cohomology.hpp"

#include <algorithm>
#include <cstdlib>

#include "discoh/parallel.hpp"
#include "discoh/resolution.hpp"

namespace discoh {

unsigned default_threads() {
  if (const char* env = std::getenv("DISCOH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

BettiReport make_report(const ArrangementParams& params, const BettiNumbers& b) {
  BettiReport r;
  r.n = params.n();
  r.ell = params.ell();
  r.dims = b.dims;
  r.betti = b.betti;
  r.euler = b.euler;
  return r;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

template <class T>
BettiNumbers local_numbers(const ArrangementParams& params, const std::vector<T>& t) {
  GradedComplexEval<T> cx;
  cx.dims = degree_dims(params);
  const auto boundaries = all_boundaries(params, t);
  for (int q = 0; q < params.rank(); ++q) cx.maps.push_back(cochain_from_boundary(q, boundaries[q]));
  return complex_betti(cx);
}

}  // namespace

BettiReport os_betti(const ArrangementParams& params, const WeightVector& lambda) {
  check_length(params, lambda.size(), "weight vector");
  GradedComplexEval<Rational> cx;
  cx.dims = degree_dims(params);
  for (int q = 0; q < params.rank(); ++q) cx.maps.push_back(mu_naive(params, q, lambda));
  auto r = make_report(params, complex_betti(cx));
  r.provenance = {{"kind", "orlik-solomon"}, {"lambda", join(lambda)}};
  return r;
}

BettiReport local_betti(const ArrangementParams& params, const std::vector<Rational>& t) {
  check_torus_point(params, t);
  auto r = make_report(params, local_numbers(params, t));
  r.provenance = {{"kind", "rational-torus-point"}, {"t", join(t)}};
  return r;
}

BettiReport local_betti(const ArrangementParams& params, const std::vector<Fp>& t) {
  check_torus_point(params, t);
  auto r = make_report(params, local_numbers(params, t));
  std::string ts;
  for (const auto& x : t) ts += (ts.empty() ? "" : ",") + std::to_string(x.residue(x.p));
  r.provenance = {{"kind", "prime-field-torus-point"}, {"p", std::to_string(t.empty() ? 0 : t[0].p)}, {"t", ts}};
  return r;
}

BettiReport local_betti_cyclotomic(const ArrangementParams& params, const WeightVector& lambda,
                                   std::vector<std::uint64_t> primes) {
  check_length(params, lambda.size(), "weight vector");
  const auto m = common_denominator(lambda);
  if (primes.empty()) primes = admissible_primes(m);
  std::vector<std::uint64_t> usable;
  for (auto p : primes)
    if (is_prime(p) && (p - 1) % m == 0) usable.push_back(p);
  if (usable.empty()) throw DomainError("no admissible primes p = 1 mod " + std::to_string(m));
  std::map<std::uint64_t, std::uint64_t> generators;
  auto consensus = multi_prime_betti(usable, [&](std::uint64_t p) {
    const auto pt = cyclotomic_point(lambda, p);
    generators[p] = pt.g;
    return local_numbers(params, pt.t);
  });
  BettiReport r;
  r.n = params.n();
  r.ell = params.ell();
  r.dims = consensus.per_prime.front().dims;
  r.betti = consensus.estimate;
  r.euler = consensus.per_prime.front().euler;
  std::string ps, gs;
  for (auto p : usable) {
    ps += (ps.empty() ? "" : ",") + std::to_string(p);
    gs += (gs.empty() ? "" : ",") + std::to_string(generators[p]);
  }
  r.provenance = {{"kind", "root-of-unity-mod-p"}, {"lambda", join(lambda)}, {"m", std::to_string(m)},
                  {"primes", ps},       {"generators", gs},    {"agree", consensus.agree ? "true" : "false"}};
  r.consensus = std::move(consensus);
  return r;
}

std::vector<std::size_t> generic_betti(const ArrangementParams& params) {
  std::vector<std::size_t> b(static_cast<std::size_t>(params.rank()) + 1, 0);
  std::size_t top = 1;
  for (int j = params.ell() + 1; j <= params.n(); ++j) top *= static_cast<std::size_t>(j - 2);
  b.back() = top;
  return b;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<Rational>& mu,
                                                                    const Matrix<Rational>& dstar,
                                                                    int sign) {
  if (mu.rows() != dstar.rows() || mu.cols() != dstar.cols()) return std::make_pair(std::size_t{0}, std::size_t{0});
  for (std::size_t r = 0; r < mu.rows(); ++r)
    for (std::size_t c = 0; c < mu.cols(); ++c) {
      const Rational d = sign > 0 ? dstar(r, c) : Rational(-dstar(r, c));
      if (mu(r, c) != d) return std::make_pair(r, c);
    }
  return std::nullopt;
}

LinearizationReport verify_linearization(const ArrangementParams& params,
                                         const std::optional<WeightVector>& lambda) {
  LinearizationReport rep;
  rep.n = params.n();
  rep.ell = params.ell();
  rep.degree_equal.assign(static_cast<std::size_t>(params.rank()), true);
  std::vector<std::pair<int, WeightVector>> directions;
  if (lambda) {
    check_length(params, lambda->size(), "weight vector");
    directions.emplace_back(-1, *lambda);
  } else {
    for (std::size_t c = 0; c < params.hyperplane_count(); ++c) {
      WeightVector e(params.hyperplane_count(), Rational(0));
      e[c] = 1;
      directions.emplace_back(static_cast<int>(c), e);
    }
  }
  for (const auto& [dir, w] : directions) {
    const auto dstar = all_boundary_derivatives(params, w);
    for (int q = 0; q < params.rank(); ++q) {
      const int sign = q % 2 == 0 ? 1 : -1;
      const std::pair<const char*, Matrix<Rational>> candidates[] = {
          {"closed-form", mu_closed_form(params, q, w)}, {"naive", mu_naive(params, q, w)}};
      for (const auto& [source, mu] : candidates) {
        const auto diff = first_difference(mu, dstar[q], sign);
        if (!diff) continue;
        rep.degree_equal[q] = false;
        if (!rep.mismatch) {
          const auto rows = enumerate_basis(params, q + 1);
          const auto cols = enumerate_basis(params, q);
          LinearizationMismatch mm;
          mm.q = q;
          mm.direction = dir;
          mm.source = source;
          if (diff->first < rows.size()) mm.row = rows[diff->first];
          if (diff->second < cols.size()) mm.col = cols[diff->second];
          if (diff->first < mu.rows() && diff->second < mu.cols()) mm.actual = mu(diff->first, diff->second);
          if (diff->first < dstar[q].rows() && diff->second < dstar[q].cols())
            mm.expected = sign * dstar[q](diff->first, diff->second);
          rep.mismatch = mm;
        }
      }
    }
    ++rep.directions_checked;
  }
  return rep;
}

bool resonance_membership(const ArrangementParams& params, int k, int m, const WeightVector& lambda) {
  if (k < 0 || k > params.rank()) throw DomainError("k must lie in [0, n-ell]");
  if (m < 1) throw DomainError("m must be positive");
  const auto dims = degree_dims(params);
  std::size_t ranks = k > 0 ? rank(mu_naive(params, k - 1, lambda)) : 0;
  if (k < params.rank()) ranks += rank(mu_naive(params, k, lambda));
  return ranks + static_cast<std::size_t>(m) <= dims[k];
}

namespace {

Rational int_power(const Rational& u, long e) {
  Rational r = 1;
  const Rational base = e >= 0 ? u : Rational(1 / u);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
  return r;
}

}  // namespace

TangentConeProbe tangent_cone_probe(const ArrangementParams& params, int k, int m,
                                    const WeightVector& lambda, const std::vector<Rational>& us) {
  check_length(params, lambda.size(), "weight vector");
  for (const auto& x : lambda)
    if (x.get_den() != 1) throw DomainError("tangent-cone probe needs an integral direction");
  TangentConeProbe probe;
  probe.k = k;
  probe.m = m;
  probe.lambda = lambda;
  probe.member = resonance_membership(params, k, m, lambda);
  probe.agrees = true;
  for (const auto& u : us) {
    if (is_zero(u)) throw DomainError("u = 0 is not a torus point");
    ProbeRow row;
    row.u = u;
    row.trivial = u == 1;
    std::vector<Rational> t;
    for (const auto& x : lambda) t.push_back(int_power(u, x.get_num().get_si()));
    row.dim_hk = local_betti(params, t).betti[static_cast<std::size_t>(k)];
    if (!row.trivial && (row.dim_hk >= static_cast<std::size_t>(m)) != probe.member) probe.agrees = false;
    probe.rows.push_back(row);
  }
  return probe;
}

Rational random_rational(std::mt19937_64& rng, int height, bool nonzero) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height);
  while (true) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (!nonzero || !is_zero(x)) return x;
  }
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t size, int height, bool nonzero) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_rational(rng, height, nonzero));
  return v;
}

namespace {

std::vector<std::vector<Rational>> scan_samples(const ArrangementParams& params, const SamplerSpec& spec) {
  const std::size_t N = params.hyperplane_count();
  std::vector<std::vector<Rational>> out;
  if (spec.kind == SamplerSpec::Kind::Random) {
    std::mt19937_64 rng(spec.seed);
    for (std::size_t s = 0; s < spec.count; ++s) out.push_back(random_vector(rng, N, spec.height));
    return out;
  }
  if (spec.lo > spec.hi) throw DomainError("empty grid range");
  std::vector<int> cur(N, spec.lo);
  while (true) {
    const bool origin = std::all_of(cur.begin(), cur.end(), [](int v) { return v == 0; });
    if (!origin || spec.include_origin) {
      std::vector<Rational> v;
      for (int x : cur) v.emplace_back(x);
      out.push_back(std::move(v));
    }
    std::size_t p = N;
    while (p > 0 && cur[p - 1] == spec.hi) cur[--p] = spec.lo;
    if (p == 0) break;
    ++cur[p - 1];
  }
  return out;
}

std::size_t span_dimension(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  Matrix<Rational> m(vectors.size(), vectors[0].size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < vectors[r].size(); ++c) m(r, c) = vectors[r][c];
  return rank(m);
}

}  // namespace

ScanResult resonance_scan(const ArrangementParams& params, int k, int m, const SamplerSpec& spec,
                          unsigned threads) {
  if (k < 0 || k > params.rank()) throw DomainError("k must lie in [0, n-ell]");
  if (m < 1) throw DomainError("m must be positive");
  if (threads == 0) threads = default_threads();
  ScanResult res;
  res.k = k;
  res.m = m;
  res.seed = spec.seed;
  const auto samples = scan_samples(params, spec);
  res.records.resize(samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    const auto report = os_betti(params, samples[i]);
    res.records[i] = {samples[i], report.betti, report.betti[static_cast<std::size_t>(k)] >= static_cast<std::size_t>(m)};
  });

  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  auto closed_under_combination = [&](const std::vector<std::size_t>& idx) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> v(params.hyperplane_count(), Rational(0));
      for (auto i : idx) {
        const Rational c = random_rational(rng, 5, true);
        for (std::size_t d = 0; d < v.size(); ++d) v[d] += c * res.records[i].lambda[d];
      }
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); })) continue;
      if (!resonance_membership(params, k, m, v)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    if (!res.records[i].member) continue;
    bool placed = false;
    for (auto& g : res.groups) {
      auto trial = g.members;
      trial.push_back(i);
      if (closed_under_combination(trial)) {
        g.members = std::move(trial);
        placed = true;
        break;
      }
    }
    if (!placed) res.groups.push_back({{i}, 0, true});
  }
  for (auto& g : res.groups) {
    std::vector<std::vector<Rational>> vs;
    for (auto i : g.members) vs.push_back(res.records[i].lambda);
    g.span_dim = span_dimension(vs);
    g.closed = closed_under_combination(g.members);
  }
  return res;
}

bool SandwichReport::ok() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

SandwichReport sandwich_check(const ArrangementParams& params, const WeightVector& lambda,
                              std::vector<std::uint64_t> primes) {
  SandwichReport rep;
  const auto os = os_betti(params, lambda);
  rep.local = local_betti_cyclotomic(params, lambda, std::move(primes));
  rep.os_betti = os.betti;
  rep.local_betti = rep.local.betti;
  rep.dims = os.dims;
  for (std::size_t k = 0; k < rep.dims.size(); ++k)
    rep.holds.push_back(rep.os_betti[k] <= rep.local_betti[k] && rep.local_betti[k] <= rep.dims[k]);
  return rep;
}

}  // namespace discoh
