#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "discoh/combinatorics.hpp"
#include "discoh/cyclotomic.hpp"
#include "discoh/linalg.hpp"
#include "discoh/orlik_solomon.hpp"
#include "discoh/params.hpp"

namespace discoh {

struct BettiReport {
  int n = 0;
  int ell = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> betti;
  long euler = 0;
  /// Where the coefficients came from: "kind" plus kind-specific fields.
  std::map<std::string, std::string> provenance;
  /// Present for the root-of-unity route.
  std::optional<ConsensusReport> consensus;
};

/// Cohomology of (A, mu(lambda)).
BettiReport os_betti(const ArrangementParams& params, const WeightVector& lambda);
/// Local-system cohomology at a rational torus point.
BettiReport local_betti(const ArrangementParams& params, const std::vector<Rational>& t);
/// Local-system cohomology at a point of (F_p^*)^N.
BettiReport local_betti(const ArrangementParams& params, const std::vector<Fp>& t);
/// Local system t = exp(-2 pi i lambda) for rational lambda, estimated over
/// several primes p = 1 mod m. Empty `primes` selects admissible_primes(m).
BettiReport local_betti_cyclotomic(const ArrangementParams& params, const WeightVector& lambda,
                                   std::vector<std::uint64_t> primes = {});

/// Betti numbers a generic rank-one local system must have: zero below the
/// top degree, prod_{j=ell+1}^{n} (j-2) on top (zero when ell = 1).
std::vector<std::size_t> generic_betti(const ArrangementParams& params);

struct LinearizationMismatch {
  int q = 0;
  int direction = -1;  // coordinate index, -1 for a caller-supplied lambda
  std::string source;  // "closed-form" or "naive"
  BasisIndex row, col;
  Rational expected, actual;
};

struct LinearizationReport {
  int n = 0, ell = 0;
  std::vector<bool> degree_equal;  // per q
  std::size_t directions_checked = 0;
  std::optional<LinearizationMismatch> mismatch;
  bool ok() const { return !mismatch.has_value(); }
};

/// First entry where mu differs from sign * dstar (both rows A^{q+1}, cols A^q).
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<Rational>& mu,
                                                                    const Matrix<Rational>& dstar,
                                                                    int sign);

/// Compares mu^q(lambda) (closed form and naive) with (-1)^q times the
/// derivative of d_{q+1} at t = 1 for every q. Without lambda, sweeps all N
/// coordinate directions, which spans every lambda by linearity.
LinearizationReport verify_linearization(const ArrangementParams& params,
                                         const std::optional<WeightVector>& lambda = std::nullopt);

/// rank mu^{k-1} + rank mu^k <= dim A^k - m, i.e. dim H^k(A, mu(lambda)) >= m.
bool resonance_membership(const ArrangementParams& params, int k, int m, const WeightVector& lambda);

struct ProbeRow {
  Rational u;
  std::size_t dim_hk = 0;
  bool trivial = false;  // u = 1 gives the trivial local system
};

struct TangentConeProbe {
  int k = 0, m = 0;
  std::vector<Rational> lambda;
  bool member = false;
  std::vector<ProbeRow> rows;
  /// Every non-trivial sample has dim H^k >= m exactly when lambda is resonant.
  bool agrees = false;
};

/// Local systems along the one-parameter subgroup t(u) = (u^{lambda_c}).
TangentConeProbe tangent_cone_probe(const ArrangementParams& params, int k, int m,
                                    const WeightVector& lambda, const std::vector<Rational>& us);

/// Uniform rational with numerator in [-h, h] and denominator in [1, h].
Rational random_rational(std::mt19937_64& rng, int height, bool nonzero = false);
std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t size, int height,
                                    bool nonzero = false);

struct SamplerSpec {
  enum class Kind { Grid, Random } kind = Kind::Grid;
  int lo = -2, hi = 2;        // grid range, integers
  std::size_t count = 100;    // random samples
  int height = 5;             // random rationals
  std::uint64_t seed = 1;
  bool include_origin = false;
};

struct ScanRecord {
  std::vector<Rational> lambda;
  std::vector<std::size_t> betti;
  bool member = false;
};

struct ScanGroup {
  std::vector<std::size_t> members;  // indices into records
  std::size_t span_dim = 0;
  bool closed = true;  // every sampled combination was still a hit
};

struct ScanResult {
  int k = 0, m = 0;
  std::uint64_t seed = 0;
  std::vector<ScanRecord> records;
  std::vector<ScanGroup> groups;
};

/// Evaluates membership on each sample (in parallel, order preserved), then
/// greedily groups hits whose random rational combinations stay resonant.
ScanResult resonance_scan(const ArrangementParams& params, int k, int m, const SamplerSpec& spec,
                          unsigned threads = 0);

struct SandwichReport {
  std::vector<std::size_t> os_betti;
  std::vector<std::size_t> local_betti;
  std::vector<std::size_t> dims;
  std::vector<bool> holds;  // per degree
  BettiReport local;
  bool ok() const;
};

/// dim H^k(A, mu(lambda)) <= dim H^k(M; L_t) <= dim A^k for t = exp(-2 pi i lambda).
SandwichReport sandwich_check(const ArrangementParams& params, const WeightVector& lambda,
                              std::vector<std::uint64_t> primes = {});

}  // namespace discoh
