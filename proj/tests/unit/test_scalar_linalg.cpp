#include <doctest.h>

#include "discoh/cyclotomic.hpp"
#include "discoh/linalg.hpp"
#include "test_support.hpp"

using namespace discoh;
using testing::rat;

TEST_CASE("rationals print canonically and parse back") {
  CHECK(to_string(rat(-3, 2)) == "-3/2");
  CHECK(to_string(rat(6, -4)) == "-3/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(parse_rational(" -6/4 ") == rat(-3, 2));
  CHECK(parse_rational("+7") == rat(7));
  CHECK_THROWS_AS(parse_rational("10/-4"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK(parse_rational_list("1, -1/2,3") == std::vector<Rational>{rat(1), rat(-1, 2), rat(3)});
  CHECK_THROWS_AS(inverse(Rational(0)), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const std::uint64_t p = 7;
  Fp a(3, p), b(5, p);
  CHECK((a + b).residue(p) == 1);
  CHECK((a - b).residue(p) == 5);
  CHECK((a * b).residue(p) == 1);
  CHECK((inverse(a) * a).residue(p) == 1);
  CHECK(is_zero(Fp(14, p)));
  CHECK((Fp(1) + a).residue(p) == 4);
  CHECK((Fp(-1) * a).residue(p) == 4);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), ScalarKindError);
  CHECK_THROWS_AS(inverse(Fp(0, 7)), DomainError);
  CHECK(powmod(3, 6, 7) == 1);
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
  const std::uint64_t big = (1ULL << 61) - 1;
  CHECK(mulmod(big - 1, big - 1, big) == 1);
}

TEST_CASE("dual numbers carry first derivatives") {
  Dual<Rational> x(rat(2), rat(3));
  auto y = x * x;
  CHECK(y.a == 4);
  CHECK(y.b == 12);
  auto xi = inverse(x);
  CHECK((x * xi).a == 1);
  CHECK((x * xi).b == 0);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix<Rational>(3, 4)) == 0);
  CHECK(rank(Matrix<Rational>::identity(5)) == 5);
  CHECK(rank(Matrix<Rational>(0, 3)) == 0);
  // mu^1 of A(3,1), columns (-l13,-l23), (l12+l23,-l23), (-l13,l12+l13)
  auto mu1 = [](Rational a, Rational b, Rational c) {
    Matrix<Rational> m(2, 3);
    m(0, 0) = -b; m(1, 0) = -c;
    m(0, 1) = a + c; m(1, 1) = -c;
    m(0, 2) = -b; m(1, 2) = a + b;
    return m;
  };
  CHECK(rank(mu1(1, 1, -2)) == 1);
  CHECK(rank(mu1(1, 1, 1)) == 2);
}

TEST_CASE("fraction-free rank matches naive elimination and the transpose") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 100; ++s) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto m = s % 2 ? testing::random_low_rank(rng, r, c, 1 + rng() % 4)
                   : testing::random_matrix(rng, r, c, 9, static_cast<int>(rng() % 80));
    const auto k = rank(m);
    CHECK(k == rank(m.transpose()));
    if (s < 50) CHECK(k == testing::naive_rank(m));
  }
}

TEST_CASE("rank over F_p never exceeds the rational rank") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 40; ++s) {
    auto m = testing::random_low_rank(rng, 6, 5, 1 + rng() % 4);
    const auto k = rank(m);
    for (std::uint64_t p : {2ULL, 3ULL, 1000003ULL}) {
      bool divisible = false;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) divisible = divisible || m(r, c).get_den() % p == 0;
      if (divisible) CHECK_THROWS_AS(rank_mod_p(m, p), DomainError);
      else CHECK(rank_mod_p(m, p) <= k);
    }
    auto mp = m.map([](const Rational& x) {
      const std::uint64_t p = 1000003;
      Fp num(mpz_class(x.get_num() % static_cast<unsigned long>(p)).get_si(), p);
      Fp den(mpz_class(x.get_den() % static_cast<unsigned long>(p)).get_si(), p);
      return num * inverse(den);
    });
    CHECK(rank(mp) == rank_mod_p(m, 1000003));
  }
}

TEST_CASE("complex betti numbers") {
  GradedComplexEval<Rational> zero{{1, 3, 2}, {Matrix<Rational>(3, 1), Matrix<Rational>(2, 3)}};
  auto b = complex_betti(zero);
  CHECK(b.betti == std::vector<std::size_t>{1, 3, 2});
  CHECK(b.euler == 0);

  Matrix<Rational> d0(3, 1), d1(2, 3);
  d0(0, 0) = 1; d0(1, 0) = 1; d0(2, 0) = -2;
  d1(0, 0) = -1; d1(1, 0) = 2; d1(0, 1) = -1; d1(1, 1) = 2; d1(0, 2) = -1; d1(1, 2) = 2;
  auto c = complex_betti(GradedComplexEval<Rational>{{1, 3, 2}, {d0, d1}});
  CHECK(c.betti == std::vector<std::size_t>{0, 1, 1});

  Matrix<Rational> bad(2, 3);
  bad(0, 0) = 1;
  try {
    complex_betti(GradedComplexEval<Rational>{{1, 3, 2}, {d0, bad}});
    FAIL("expected an invariant error");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
  }
  CHECK_THROWS_AS(complex_betti(GradedComplexEval<Rational>{{1, 3, 2}, {d1, d0}}), InvariantError);
}

TEST_CASE("betti numbers satisfy the Euler relation on random complexes") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 30; ++s) {
    // rows of g are orthogonal to the image of f
    const std::size_t a = 1 + rng() % 3, b = 2 + rng() % 4, c = 1 + rng() % 3;
    auto u = testing::random_matrix(rng, b, 1, 5, 20);
    auto f = u * testing::random_matrix(rng, 1, a, 5, 20);
    Matrix<Rational> g(c, b);
    for (std::size_t r = 0; r < c; ++r) {
      auto v = testing::random_matrix(rng, 1, b, 5, 30);
      Rational dot = 0, nn = 0;
      for (std::size_t k = 0; k < b; ++k) {
        dot += v(0, k) * u(k, 0);
        nn += u(k, 0) * u(k, 0);
      }
      for (std::size_t k = 0; k < b; ++k) g(r, k) = is_zero(nn) ? v(0, k) : v(0, k) - dot / nn * u(k, 0);
    }
    auto res = complex_betti(GradedComplexEval<Rational>{{a, b, c}, {f, g}});
    long chi = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      chi += (k % 2 ? -1L : 1L) * static_cast<long>(res.betti[k]);
      CHECK(res.betti[k] <= res.dims[k]);
    }
    CHECK(chi == static_cast<long>(a) - static_cast<long>(b) + static_cast<long>(c));
  }
}

TEST_CASE("roots of unity in prime fields") {
  CHECK(root_of_unity(3, 7) == 2);
  CHECK(root_of_unity(2, 5) == 4);
  CHECK(root_of_unity(1, 11) == 1);
  CHECK_THROWS_AS(root_of_unity(3, 11), DomainError);
  CHECK_THROWS_AS(root_of_unity(2, 9), DomainError);
  for (auto p : admissible_primes(6)) {
    CHECK(p >= 1000000);
    CHECK(p % 6 == 1);
    CHECK(is_prime(p));
    const auto g = root_of_unity(6, p);
    CHECK(powmod(g, 6, p) == 1);
    CHECK(powmod(g, 2, p) != 1);
    CHECK(powmod(g, 3, p) != 1);
  }
  CHECK(common_denominator({rat(1, 2), rat(2, 3), rat(5)}) == 6);
}

TEST_CASE("cyclotomic points") {
  auto integral = cyclotomic_point({rat(1), rat(-2), rat(0)}, 7);
  CHECK(integral.m == 1);
  for (const auto& x : integral.t) CHECK(x.residue(7) == 1);
  auto half = cyclotomic_point({rat(1, 2), rat(1), rat(-1, 2)}, 5);
  CHECK(half.g == 4);
  CHECK(half.t[0].residue(5) == 4);
  CHECK(half.t[1].residue(5) == 1);
  CHECK(half.t[2].residue(5) == 4);
  auto third = cyclotomic_point({rat(1, 3), rat(2, 3)}, 7);
  CHECK(third.g == 2);
  // exp(-2 pi i / 3) -> g^{-1} = 4, exp(-4 pi i / 3) -> g^{-2} = 2
  CHECK(third.t[0].residue(7) == 4);
  CHECK(third.t[1].residue(7) == 2);
}

TEST_CASE("multi-prime consensus flags disagreement") {
  auto fake = [](std::uint64_t p) {
    BettiNumbers b;
    b.dims = {1, 2, 1};
    b.betti = p == 13 ? std::vector<std::size_t>{0, 1, 1} : std::vector<std::size_t>{0, 0, 0};
    return b;
  };
  auto r = multi_prime_betti({7, 13, 19}, fake);
  CHECK_FALSE(r.agree);
  CHECK(r.estimate == std::vector<std::size_t>{0, 0, 0});
  auto same = multi_prime_betti({7, 13}, [](std::uint64_t) {
    BettiNumbers b;
    b.betti = {1, 1};
    return b;
  });
  CHECK(same.agree);
  CHECK_THROWS_AS(multi_prime_betti({7}, fake), DomainError);
}
