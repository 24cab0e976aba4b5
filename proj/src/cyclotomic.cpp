#include "discoh/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace discoh {

std::uint64_t common_denominator(const std::vector<Rational>& lambda) {
  Integer l = 1;
  for (const auto& x : lambda) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  if (!l.fits_ulong_p()) throw DomainError("common denominator too large");
  return l.get_ui();
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

bool has_order(std::uint64_t x, std::uint64_t m, std::uint64_t p,
               const std::vector<std::uint64_t>& factors) {
  if (powmod(x, m, p) != 1) return false;
  for (auto f : factors)
    if (powmod(x, m / f, p) == 1) return false;
  return true;
}

}  // namespace

std::uint64_t root_of_unity(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw DomainError("order must be positive");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if ((p - 1) % m != 0)
    throw DomainError("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(m));
  if (m == 1) return 1;
  const auto factors = prime_factors(m);
  // Any element of order m generates the rest as its powers coprime to m.
  std::uint64_t g = 0;
  for (std::uint64_t h = 2; h < p && !g; ++h) {
    const auto c = powmod(h, (p - 1) / m, p);
    if (has_order(c, m, p, factors)) g = c;
  }
  std::uint64_t best = g, x = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    x = mulmod(x, g, p);
    if (std::gcd(k, m) == 1) best = std::min(best, x);
  }
  return best;
}

std::vector<std::uint64_t> admissible_primes(std::uint64_t m, std::size_t count, std::uint64_t start) {
  if (m == 0) throw DomainError("order must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(start, 2); out.size() < count; ++p)
    if ((p - 1) % m == 0 && is_prime(p)) out.push_back(p);
  return out;
}

CyclotomicPoint cyclotomic_point(const std::vector<Rational>& lambda, std::uint64_t p) {
  CyclotomicPoint pt;
  pt.m = common_denominator(lambda);
  pt.p = p;
  pt.g = root_of_unity(pt.m, p);
  const auto m = static_cast<std::int64_t>(pt.m);
  for (const auto& x : lambda) {
    const Integer a = x.get_num() * (Integer(static_cast<unsigned long>(pt.m)) / x.get_den());
    Integer e = (-a) % m;
    if (e < 0) e += m;
    pt.t.emplace_back(static_cast<std::int64_t>(powmod(pt.g, e.get_ui(), p)), p);
  }
  return pt;
}

ConsensusReport multi_prime_betti(const std::vector<std::uint64_t>& primes,
                                  const std::function<BettiNumbers(std::uint64_t)>& betti_at) {
  if (primes.size() < 2) throw DomainError("multi-prime consensus needs at least two primes");
  ConsensusReport rep;
  rep.primes = primes;
  for (auto p : primes) rep.per_prime.push_back(betti_at(p));
  rep.estimate = rep.per_prime.front().betti;
  for (const auto& b : rep.per_prime) {
    if (b.betti != rep.per_prime.front().betti) rep.agree = false;
    for (std::size_t k = 0; k < rep.estimate.size(); ++k) rep.estimate[k] = std::min(rep.estimate[k], b.betti[k]);
  }
  return rep;
}

}  // namespace discoh
