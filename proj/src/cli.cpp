#include "discoh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "discoh/cohomology.hpp"
#include "discoh/parallel.hpp"
#include "discoh/resolution.hpp"
#include "discoh/serialize.hpp"

namespace discoh {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 0;
  int ell = 0;
  int q = -1;
  int k = 1;
  int m = 1;
  std::string weights, weights_file, t, t_file, primes, output, format, u, grid = "-2:2", method = "closed-form";
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t random_count = 0;
  int height = 5;
  unsigned threads = 0;
  bool symbolic = false, derivative = false, include_origin = false, mapping_cone = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ',';
  while (!s.empty() && s.back() == ',') s.pop_back();
  return s;
}

std::vector<Rational> vector_arg(const ArrangementParams& params, const std::string& inline_value,
                                 const std::string& file, const char* what) {
  const std::string text = !inline_value.empty() ? inline_value : read_file(file);
  std::vector<Rational> v;
  try {
    v = parse_rational_list(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (v.size() != params.hyperplane_count())
    throw UsageError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected N=" +
                     std::to_string(params.hyperplane_count()) + " (pairs ordered by (j,i))");
  return v;
}

std::vector<std::uint64_t> prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw UsageError("bad prime '" + item + "'");
    }
  }
  return out;
}

void add_params(CLI::App* sub, Config& c) {
  sub->add_option("--n", c.n, "number of points n (>= 2)")->required();
  sub->add_option("--ell", c.ell, "puncture level ell in [1, n-1]")->required();
}

void add_output(CLI::App* sub, Config& c) {
  sub->add_option("--output,-o", c.output, "write the result to this file instead of stdout");
}

void add_weights(CLI::App* sub, Config& c, bool required) {
  auto* w = sub->add_option("--weights", c.weights,
                            "lambda as comma-separated rationals, pairs ordered by (j,i): (1,ell+1),...");
  auto* f = sub->add_option("--weights-file", c.weights_file, "file holding lambda (commas or newlines)");
  w->excludes(f);
  if (required) {
    auto* g = sub->add_option_group("weights");
    g->add_option(w);
    g->add_option(f);
    g->require_option(1);
  }
}

void add_torus(CLI::App* sub, Config& c) {
  auto* t = sub->add_option("--t", c.t, "torus point t as comma-separated nonzero rationals, (j,i) order");
  auto* f = sub->add_option("--t-file", c.t_file, "file holding t");
  t->excludes(f);
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool has_weights(const Config& c) { return !c.weights.empty() || !c.weights_file.empty(); }
bool has_torus(const Config& c) { return !c.t.empty() || !c.t_file.empty(); }

void check_degree(const ArrangementParams& p, int q, int lo, int hi, const char* what) {
  if (q < lo || q > hi)
    throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "] for A(" + std::to_string(p.n()) + "," + std::to_string(p.ell()) + ")");
}

int dispatch(const std::string& name, Config& c, std::ostream& out, std::ostream& err) {
  const ArrangementParams params(c.n, c.ell);
  const unsigned threads = c.threads ? c.threads : default_threads();

  if (name == "dims") {
    const auto dims = degree_dims(params);
    if (c.format == "json") {
      emit(c, out, dump(Json{{"n", c.n}, {"ell", c.ell}, {"dims", dims}}));
    } else {
      std::string s;
      for (auto d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
      emit(c, out, s + "\n");
    }
    return kExitOk;
  }
  if (name == "basis") {
    Json j = Json::object();
    j["n"] = c.n;
    j["ell"] = c.ell;
    if (c.q >= 0) {
      j["q"] = c.q;
      j["basis"] = basis_to_json(enumerate_basis(params, c.q));
    } else {
      Json all = Json::array();
      for (int q = 0; q <= params.rank(); ++q) all.push_back(basis_to_json(enumerate_basis(params, q)));
      j["basis"] = all;
    }
    emit(c, out, dump(j));
    return kExitOk;
  }
  if (name == "mu") {
    check_degree(params, c.q, 0, params.rank(), "--q");
    const auto w = vector_arg(params, c.weights, c.weights_file, "--weights");
    Matrix<Rational> m;
    if (c.method == "naive") m = mu_naive(params, c.q, w);
    else if (c.method == "closed-form") m = mu_closed_form(params, c.q, w);
    else throw UsageError("--method must be naive or closed-form");
    emit(c, out, dump(matrix_to_json(c.n, c.ell, c.q, m)));
    return kExitOk;
  }
  if (name == "boundary") {
    check_degree(params, c.q, 1, params.rank(), "--q");
    if (c.symbolic) {
      emit(c, out, dump(grmatrix_to_json(c.n, c.ell, c.q, assemble_boundary(params, c.q))));
    } else if (c.derivative) {
      const auto w = vector_arg(params, c.weights, c.weights_file, "--weights");
      emit(c, out, dump(matrix_to_json(c.n, c.ell, c.q, boundary_derivative(params, c.q, w))));
    } else {
      if (!has_torus(c)) throw UsageError("boundary needs --t, --derivative with --weights, or --symbolic");
      const auto t = vector_arg(params, c.t, c.t_file, "--t");
      emit(c, out, dump(matrix_to_json(c.n, c.ell, c.q, boundary_eval(params, c.q, t))));
    }
    return kExitOk;
  }
  if (name == "betti") {
    const auto w = vector_arg(params, c.weights, c.weights_file, "--weights");
    emit(c, out, dump(betti_to_json(os_betti(params, w))));
    return kExitOk;
  }
  if (name == "local-betti") {
    BettiReport r;
    if (has_torus(c)) {
      r = local_betti(params, vector_arg(params, c.t, c.t_file, "--t"));
    } else if (has_weights(c)) {
      r = local_betti_cyclotomic(params, vector_arg(params, c.weights, c.weights_file, "--weights"),
                                 prime_list(c.primes));
    } else {
      std::mt19937_64 rng(c.seed);
      r = local_betti(params, random_vector(rng, params.hyperplane_count(), c.height, true));
      r.provenance["seed"] = std::to_string(c.seed);
      err << "seed: " << c.seed << "\n";
    }
    emit(c, out, dump(betti_to_json(r)));
    return r.consensus && !r.consensus->agree ? kExitVerificationFailed : kExitOk;
  }
  if (name == "verify-linearization") {
    std::optional<WeightVector> w;
    if (has_weights(c)) w = vector_arg(params, c.weights, c.weights_file, "--weights");
    const auto rep = verify_linearization(params, w);
    emit(c, out, dump(linearization_to_json(rep)));
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  if (name == "verify-resolution") {
    const std::size_t samples = c.samples ? c.samples : 5;
    std::mt19937_64 rng(c.seed);
    const ResolutionLayout layout(params);
    const auto dims = degree_dims(params);
    bool shapes = true, trivial = true, composes = true, cone = true;
    const std::vector<Rational> ones(params.hyperplane_count(), Rational(1));
    const auto at_one = all_boundaries(params, ones);
    for (int q = 1; q <= params.rank(); ++q) {
      const auto& d = at_one[q - 1];
      if (d.rows() != dims[q] || d.cols() != dims[q - 1] || layout.dim(q) != dims[q]) shapes = false;
      if (!d.is_zero_matrix()) trivial = false;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      const auto t = random_vector(rng, params.hyperplane_count(), c.height, true);
      const auto b = all_boundaries(params, t);
      for (std::size_t q = 0; q + 1 < b.size(); ++q)
        if (!(b[q + 1] * b[q]).is_zero_matrix()) composes = false;
      if (c.mapping_cone)
        for (int q = 0; q < params.rank(); ++q) cone = cone && mapping_cone_check(params, q, t).ok();
    }
    Json j{{"n", c.n},           {"ell", c.ell},        {"seed", c.seed},        {"samples", samples},
           {"shapes", shapes},   {"trivial_point_zero", trivial}, {"compositions_zero", composes}};
    if (c.mapping_cone) j["mapping_cone"] = cone;
    const bool ok = shapes && trivial && composes && cone;
    j["ok"] = ok;
    emit(c, out, dump(j));
    return ok ? kExitOk : kExitVerificationFailed;
  }
  if (name == "sandwich") {
    const auto w = vector_arg(params, c.weights, c.weights_file, "--weights");
    const auto rep = sandwich_check(params, w, prime_list(c.primes));
    emit(c, out, dump(sandwich_to_json(rep)));
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  if (name == "resonance-scan") {
    check_degree(params, c.k, 0, params.rank(), "--k");
    if (c.m < 1) throw UsageError("--m must be positive");
    SamplerSpec spec;
    spec.seed = c.seed;
    spec.height = c.height;
    spec.include_origin = c.include_origin;
    if (c.random_count) {
      spec.kind = SamplerSpec::Kind::Random;
      spec.count = c.random_count;
    } else {
      const auto colon = c.grid.find(':');
      if (colon == std::string::npos) throw UsageError("--grid expects lo:hi");
      try {
        spec.lo = std::stoi(c.grid.substr(0, colon));
        spec.hi = std::stoi(c.grid.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("--grid expects integers lo:hi");
      }
    }
    const auto res = resonance_scan(params, c.k, c.m, spec, threads);
    if (c.format == "json") {
      emit(c, out, dump(scan_to_json(params, res)));
    } else {
      err << "seed: " << c.seed << "\n";
      emit(c, out, scan_to_csv(params, res));
    }
    return kExitOk;
  }
  if (name == "tangent-cone") {
    check_degree(params, c.k, 0, params.rank(), "--k");
    const auto w = vector_arg(params, c.weights, c.weights_file, "--weights");
    for (const auto& x : w)
      if (x.get_den() != 1) throw UsageError("--weights must be integral for the tangent-cone probe");
    std::vector<Rational> us;
    if (!c.u.empty()) {
      us = parse_rational_list(c.u);
    } else {
      std::mt19937_64 rng(c.seed);
      const std::size_t count = c.samples ? c.samples : 3;
      while (us.size() < count) {
        const auto u = random_rational(rng, std::max(c.height, 3), true);
        if (u != 1 && u != -1) us.push_back(u);
      }
      err << "seed: " << c.seed << "\n";
    }
    for (const auto& u : us)
      if (is_zero(u)) throw UsageError("--u values must be nonzero");
    const auto probe = tangent_cone_probe(params, c.k, c.m, w, us);
    Json j = probe_to_json(probe);
    if (c.u.empty()) j["seed"] = c.seed;
    emit(c, out, dump(j));
    return probe.agrees ? kExitOk : kExitVerificationFailed;
  }
  throw UsageError("unknown subcommand " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orlik-Solomon and local-system cohomology of discriminantal arrangements A(n,ell)"};
  app.require_subcommand(1);
  Config c;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"basis", "list the nbc basis (J lexicographic, then I)"},
      {"dims", "print dim A^q for q = 0..n-ell"},
      {"mu", "matrix of mu^q(lambda) : A^q -> A^{q+1}"},
      {"boundary", "boundary map d_q at a torus point, its derivative at 1, or over the group ring"},
      {"betti", "Betti numbers of (A, mu(lambda))"},
      {"local-betti", "Betti numbers of a rank-one local system"},
      {"verify-linearization", "check mu^q = (-1)^q d_{q+1,*} on coordinate directions or a given lambda"},
      {"verify-resolution", "check shapes, d(1) = 0 and d d = 0 at random points"},
      {"sandwich", "check dim H(A,mu) <= dim H(M;L_t) <= dim A with t = exp(-2 pi i lambda)"},
      {"resonance-scan", "scan weights for dim H^k(A, mu(lambda)) >= m"},
      {"tangent-cone", "local systems along t(u) = u^lambda beside resonance membership"},
  };
  std::map<std::string, CLI::App*> apps;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_params(sub, c);
    add_output(sub, c);
    apps[s.name] = sub;
  }
  apps["dims"]->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  apps["basis"]->add_option("--q", c.q, "degree (default: all)");
  apps["mu"]->add_option("--q", c.q, "degree")->required();
  apps["mu"]->add_option("--method", c.method, "closed-form or naive");
  add_weights(apps["mu"], c, true);
  auto* bnd = apps["boundary"];
  bnd->add_option("--q", c.q, "degree, 1..n-ell")->required();
  add_torus(bnd, c);
  add_weights(bnd, c, false);
  bnd->add_flag("--derivative", c.derivative, "derivative at t = 1 in direction --weights");
  bnd->add_flag("--symbolic", c.symbolic, "group-ring matrix; words as [[i,j,exp],...]");
  add_weights(apps["betti"], c, true);
  auto* lb = apps["local-betti"];
  add_torus(lb, c);
  add_weights(lb, c, false);
  lb->add_option("--primes", c.primes, "primes p = 1 mod m for the root-of-unity route");
  lb->add_option("--seed", c.seed, "seed for a random torus point");
  lb->add_option("--height", c.height, "height of random rationals");
  add_weights(apps["verify-linearization"], c, false);
  auto* vr = apps["verify-resolution"];
  vr->add_option("--samples", c.samples, "random torus points (default 5)");
  vr->add_option("--seed", c.seed, "random seed");
  vr->add_option("--height", c.height, "height of random rationals");
  vr->add_flag("--mapping-cone", c.mapping_cone, "also check the mapping-cone block structure at each sample");
  add_weights(apps["sandwich"], c, true);
  apps["sandwich"]->add_option("--primes", c.primes, "primes p = 1 mod m (default: three above 10^6)");
  auto* rs = apps["resonance-scan"];
  rs->add_option("--k", c.k, "cohomological degree");
  rs->add_option("--m", c.m, "depth");
  rs->add_option("--grid", c.grid, "integer grid lo:hi for every coordinate (default -2:2)");
  rs->add_option("--random", c.random_count, "sample this many random rational weights instead");
  rs->add_option("--height", c.height, "height of random rationals");
  rs->add_option("--seed", c.seed, "random seed");
  rs->add_flag("--include-origin", c.include_origin, "keep lambda = 0 in the grid");
  rs->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rs->add_option("--threads", c.threads, "worker threads (default DISCOH_THREADS or 1)");
  auto* tc = apps["tangent-cone"];
  tc->add_option("--k", c.k, "cohomological degree");
  tc->add_option("--m", c.m, "depth");
  add_weights(tc, c, true);
  tc->add_option("--u", c.u, "comma-separated nonzero rationals u");
  tc->add_option("--samples", c.samples, "random u values when --u is absent (default 3)");
  tc->add_option("--seed", c.seed, "random seed");
  tc->add_option("--height", c.height, "height of random u");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string name;
  for (const auto& [n, sub] : apps)
    if (sub->parsed()) name = n;
  try {
    return dispatch(name, c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace discoh
