#include <doctest.h>

#include "discoh/cohomology.hpp"
#include "discoh/resolution.hpp"
#include "test_support.hpp"

using namespace discoh;
using testing::rat;
using testing::rats;
using Sizes = std::vector<std::size_t>;

namespace {

long poincare_euler(int n, int ell) {
  long chi = 1;
  for (int j = ell + 1; j <= n; ++j) chi *= 2 - j;
  return chi;
}

}  // namespace

TEST_CASE("Orlik-Solomon betti examples") {
  ArrangementParams p(3, 1);
  auto r = os_betti(p, rats({1, 1, -2}));
  CHECK(r.dims == Sizes{1, 3, 2});
  CHECK(r.betti == Sizes{0, 1, 1});
  CHECK(os_betti(p, rats({1, 1, 1})).betti == Sizes{0, 0, 0});
  for (int n = 2; n <= 5; ++n)
    for (int ell = 1; ell < n; ++ell) {
      ArrangementParams q(n, ell);
      CHECK(os_betti(q, WeightVector(q.hyperplane_count(), Rational(0))).betti == degree_dims(q));
    }
}

TEST_CASE("local system betti numbers") {
  for (int n = 2; n <= 5; ++n)
    for (int ell = 1; ell < n; ++ell) {
      ArrangementParams p(n, ell);
      CHECK(local_betti(p, std::vector<Rational>(p.hyperplane_count(), Rational(1))).betti == degree_dims(p));
    }
  std::mt19937_64 rng(40);
  CHECK(local_betti(ArrangementParams(4, 2), random_vector(rng, 5, 7, true)).betti == Sizes{0, 0, 2});
  CHECK(local_betti(ArrangementParams(3, 1), random_vector(rng, 3, 7, true)).betti == Sizes{0, 0, 0});
  CHECK(generic_betti(ArrangementParams(5, 2)) == Sizes{0, 0, 0, 6});
  CHECK(generic_betti(ArrangementParams(5, 3)) == Sizes{0, 0, 6});
  CHECK(generic_betti(ArrangementParams(5, 1)) == Sizes{0, 0, 0, 0, 0});
  CHECK_THROWS_AS(local_betti(ArrangementParams(3, 1), rats({1, 0, 1})), DomainError);
}

TEST_CASE("betti reports satisfy the Euler identity and bounds") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 5; ++n)
    for (int ell = 1; ell < n; ++ell) {
      ArrangementParams p(n, ell);
      for (const auto& r : {os_betti(p, random_vector(rng, p.hyperplane_count(), 3)),
                            local_betti(p, random_vector(rng, p.hyperplane_count(), 2, true))}) {
        CHECK(r.euler == poincare_euler(n, ell));
        long chi = 0;
        for (std::size_t k = 0; k < r.betti.size(); ++k) {
          CHECK(r.betti[k] <= r.dims[k]);
          chi += (k % 2 ? -1L : 1L) * static_cast<long>(r.betti[k]);
        }
        CHECK(chi == r.euler);
      }
    }
}

TEST_CASE("root of unity local systems") {
  ArrangementParams p(3, 1);
  auto integral = local_betti_cyclotomic(p, rats({2, -1, 0}));
  CHECK(integral.betti == degree_dims(p));
  REQUIRE(integral.consensus);
  CHECK(integral.consensus->agree);
  CHECK(integral.consensus->primes.size() == 3);
  for (auto q : integral.consensus->primes) CHECK(q >= 1000000);

  std::mt19937_64 rng(42);
  ArrangementParams p42(4, 2);
  WeightVector lam;
  for (int c = 0; c < 5; ++c) lam.push_back(rat(1 + static_cast<long>(rng() % 2), 3));
  auto small = local_betti_cyclotomic(p42, lam, {7, 13, 19});
  REQUIRE(small.consensus);
  CHECK(small.consensus->agree);
  CHECK(small.provenance.at("kind") == "root-of-unity-mod-p");
  CHECK_THROWS_AS(local_betti_cyclotomic(p42, lam, {7, 11}), DomainError);
}

TEST_CASE("linearization holds on every coordinate direction") {
  for (int n = 2; n <= 4; ++n)
    for (int ell = 1; ell < n; ++ell) {
      const auto rep = verify_linearization(ArrangementParams(n, ell));
      CHECK(rep.ok());
      CHECK(rep.directions_checked == ArrangementParams(n, ell).hyperplane_count());
      for (bool b : rep.degree_equal) CHECK(b);
    }
  std::mt19937_64 rng(43);
  ArrangementParams p(5, 2);
  CHECK(verify_linearization(p, random_vector(rng, p.hyperplane_count(), 5)).ok());
  ArrangementParams p21(2, 1);
  CHECK(mu_naive(p21, 0, {rat(3)}) == boundary_derivative(p21, 1, {rat(3)}));
}

TEST_CASE("a doctored sign is located at the first odd degree") {
  ArrangementParams p(4, 1);
  const auto lam = rats({1, 2, 3, 4, 5, 6});
  int first_bad = -1;
  for (int q = 0; q < p.rank() && first_bad < 0; ++q) {
    const auto mu = mu_closed_form(p, q, lam);
    if (first_difference(mu, boundary_derivative(p, q + 1, lam), 1)) first_bad = q;
  }
  CHECK(first_bad == 1);
  CHECK_FALSE(first_difference(mu_closed_form(p, 1, lam), boundary_derivative(p, 2, lam), -1));
}

TEST_CASE("resonance membership") {
  ArrangementParams p(3, 1);
  CHECK(resonance_membership(p, 1, 1, rats({1, 1, -2})));
  CHECK_FALSE(resonance_membership(p, 1, 1, rats({1, 1, 1})));
  for (int k = 0; k <= p.rank(); ++k) {
    const auto dims = degree_dims(p);
    for (std::size_t m = 1; m <= dims[k]; ++m)
      CHECK(resonance_membership(p, k, static_cast<int>(m), rats({0, 0, 0})));
    CHECK_FALSE(resonance_membership(p, k, static_cast<int>(dims[k]) + 1, rats({0, 0, 0})));
  }
  std::mt19937_64 rng(44);
  ArrangementParams p4(4, 1);
  for (int s = 0; s < 20; ++s) {
    auto lam = random_vector(rng, p4.hyperplane_count(), 2);
    if (s % 2) lam[0] = -(lam[1] + lam[3]);
    const Rational c = random_rational(rng, 7, true);
    WeightVector scaled;
    for (const auto& x : lam) scaled.push_back(c * x);
    for (int k = 1; k <= 2; ++k) CHECK(resonance_membership(p4, k, 1, lam) == resonance_membership(p4, k, 1, scaled));
  }
}

TEST_CASE("tangent cone probe examples") {
  ArrangementParams p(3, 1);
  auto yes = tangent_cone_probe(p, 1, 1, rats({1, 1, -2}), {rat(2), rat(3), rat(5, 2)});
  CHECK(yes.member);
  CHECK(yes.agrees);
  for (const auto& row : yes.rows) CHECK(row.dim_hk >= 1);
  auto no = tangent_cone_probe(p, 1, 1, rats({1, 1, 1}), {rat(2)});
  CHECK_FALSE(no.member);
  CHECK(no.agrees);
  CHECK(no.rows[0].dim_hk == 0);
  auto triv = tangent_cone_probe(p, 1, 1, rats({1, 1, 1}), {rat(1), rat(2)});
  CHECK(triv.rows[0].trivial);
  CHECK_FALSE(triv.rows[1].trivial);
  CHECK(triv.agrees);
}

TEST_CASE("resonance scan of A(3,1)") {
  ArrangementParams p(3, 1);
  SamplerSpec spec;
  const auto res = resonance_scan(p, 1, 1, spec, 2);
  CHECK(res.records.size() == 124);
  std::size_t hits = 0;
  for (const auto& r : res.records) {
    const bool sum_zero = r.lambda[0] + r.lambda[1] + r.lambda[2] == 0;
    CHECK(r.member == sum_zero);
    hits += r.member;
  }
  CHECK(hits == 18);
  REQUIRE(res.groups.size() == 1);
  CHECK(res.groups[0].members.size() == 18);
  CHECK(res.groups[0].span_dim == 2);
  CHECK(res.groups[0].closed);
  spec.include_origin = true;
  CHECK(resonance_scan(p, 1, 1, spec, 1).records.size() == 125);

  SamplerSpec none;
  none.lo = -1;
  none.hi = 1;
  const auto empty = resonance_scan(p, 1, 4, none, 1);
  for (const auto& r : empty.records) CHECK_FALSE(r.member);

  SamplerSpec rnd;
  rnd.kind = SamplerSpec::Kind::Random;
  rnd.count = 15;
  rnd.seed = 99;
  const auto a = resonance_scan(p, 1, 1, rnd, 1), b = resonance_scan(p, 1, 1, rnd, 3);
  REQUIRE(a.records.size() == 15);
  for (std::size_t k = 0; k < 15; ++k) CHECK(a.records[k].lambda == b.records[k].lambda);
}

TEST_CASE("sandwich inequality") {
  ArrangementParams p(3, 1);
  auto half = sandwich_check(p, {rat(1, 2), rat(1, 2), rat(-1)});
  CHECK(half.ok());
  CHECK(half.os_betti.size() == 3);
  CHECK(half.local_betti.size() == 3);
  auto zero = sandwich_check(p, rats({0, 0, 0}));
  CHECK(zero.ok());
  CHECK(zero.os_betti == zero.dims);
  CHECK(zero.local_betti == zero.dims);
  auto integral = sandwich_check(p, rats({1, 2, 3}));
  CHECK(integral.local_betti == integral.dims);
  CHECK(integral.ok());
}
