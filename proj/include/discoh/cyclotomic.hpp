#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "discoh/linalg.hpp"
#include "discoh/scalar.hpp"

namespace discoh {

/// lcm of the denominators of lambda.
std::uint64_t common_denominator(const std::vector<Rational>& lambda);

/// Smallest element of F_p of multiplicative order exactly m. Requires p
/// prime and p = 1 mod m.
std::uint64_t root_of_unity(std::uint64_t m, std::uint64_t p);

/// First `count` primes >= start with p = 1 mod m.
std::vector<std::uint64_t> admissible_primes(std::uint64_t m, std::size_t count = 3,
                                             std::uint64_t start = 1000000);

struct CyclotomicPoint {
  std::uint64_t m = 1;
  std::uint64_t p = 0;
  std::uint64_t g = 1;
  std::vector<Fp> t;
};

/// Mod-p image of t = exp(-2 pi i lambda): with lambda_c = a_c / m,
/// t_c = g^{-a_c mod m}. m = 1 gives the all-ones point.
CyclotomicPoint cyclotomic_point(const std::vector<Rational>& lambda, std::uint64_t p);

struct ConsensusReport {
  std::vector<std::uint64_t> primes;
  std::vector<BettiNumbers> per_prime;
  std::vector<std::size_t> estimate;  // per-degree minimum
  bool agree = true;
};

/// Runs `betti_at` for each prime and takes the per-degree minimum. Needs at
/// least two primes.
ConsensusReport multi_prime_betti(const std::vector<std::uint64_t>& primes,
                                  const std::function<BettiNumbers(std::uint64_t)>& betti_at);

}  // namespace discoh
