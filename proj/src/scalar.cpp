#include "discoh/scalar.hpp"

#include <cctype>

namespace discoh {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s = text.substr(b, e - b);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !t.empty() && t[0] == '-') k = 1;
    if (k >= t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw DomainError("not a rational number: '" + text + "'");
  Integer d(den);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t\n") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t common_prime(const Fp& a, const Fp& b) {
  if (a.p && b.p && a.p != b.p)
    throw ScalarKindError("mixing F_" + std::to_string(a.p) + " and F_" + std::to_string(b.p));
  return a.p ? a.p : b.p;
}

}  // namespace

std::uint64_t Fp::residue(std::uint64_t prime) const {
  if (p && p != prime) throw ScalarKindError("element of F_" + std::to_string(p) + " used in F_" + std::to_string(prime));
  const auto m = static_cast<std::int64_t>(prime);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

Fp operator+(const Fp& a, const Fp& b) {
  const auto p = common_prime(a, b);
  if (!p) return Fp(static_cast<int>(a.v + b.v));
  return Fp(static_cast<std::int64_t>((a.residue(p) + b.residue(p)) % p), p);
}

Fp operator-(const Fp& a, const Fp& b) {
  const auto p = common_prime(a, b);
  if (!p) return Fp(static_cast<int>(a.v - b.v));
  return Fp(static_cast<std::int64_t>((a.residue(p) + p - b.residue(p)) % p), p);
}

Fp operator*(const Fp& a, const Fp& b) {
  const auto p = common_prime(a, b);
  if (!p) return Fp(static_cast<int>(a.v * b.v));
  return Fp(static_cast<std::int64_t>(mulmod(a.residue(p), b.residue(p), p)), p);
}

Fp operator-(const Fp& a) {
  if (!a.p) return Fp(static_cast<int>(-a.v));
  return Fp(static_cast<std::int64_t>((a.p - a.residue(a.p)) % a.p), a.p);
}

bool operator==(const Fp& a, const Fp& b) {
  const auto p = common_prime(a, b);
  if (!p) return a.v == b.v;
  return a.residue(p) == b.residue(p);
}

bool is_zero(const Fp& x) { return x.p ? x.residue(x.p) == 0 : x.v == 0; }

Fp inverse(const Fp& x) {
  if (is_zero(x)) throw DomainError("inverse of zero in a prime field");
  if (!x.p) {
    if (x.v == 1 || x.v == -1) return x;
    throw ScalarKindError("inverse of an unbound integer");
  }
  return Fp(static_cast<std::int64_t>(powmod(x.residue(x.p), x.p - 2, x.p)), x.p);
}

std::string to_string(const Fp& x) {
  if (!x.p) return std::to_string(x.v);
  return std::to_string(x.residue(x.p)) + " mod " + std::to_string(x.p);
}

}  // namespace discoh
