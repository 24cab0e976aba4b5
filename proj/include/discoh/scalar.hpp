#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "discoh/errors.hpp"

namespace discoh {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& x);
/// Accepts "a", "a/b", optional sign, surrounding whitespace. Throws DomainError.
Rational parse_rational(const std::string& text);
/// Comma-separated list of rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw DomainError("division by zero");
  return 1 / x;
}

/// Element of F_p. p == 0 marks a small integer not yet bound to a field, so
/// generic code can write T(0), T(1), T(-1).
struct Fp {
  std::int64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(int x) : v(x) {}  // NOLINT: implicit small-integer constant
  Fp(std::int64_t x, std::uint64_t prime) : p(prime) {
    const auto m = static_cast<std::int64_t>(prime);
    v = x % m;
    if (v < 0) v += m;
  }

  /// Value reduced into [0, p) once the field is known.
  std::uint64_t residue(std::uint64_t prime) const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a);
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b);
};

bool is_zero(const Fp& x);
Fp inverse(const Fp& x);
std::string to_string(const Fp& x);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// a + b*eps with eps^2 = 0. Evaluating at t = 1 + eps*lambda yields a
/// value together with its directional derivative.
template <class T>
struct Dual {
  T a{};
  T b{};

  Dual() = default;
  Dual(int x) : a(x), b(0) {}  // NOLINT: implicit small-integer constant
  Dual(T x, T y) : a(std::move(x)), b(std::move(y)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

template <class T>
bool is_zero(const Dual<T>& x) {
  return is_zero(x.a) && is_zero(x.b);
}

template <class T>
Dual<T> inverse(const Dual<T>& x) {
  T ia = inverse(x.a);
  T minus_b = -x.b;
  return {ia, minus_b * ia * ia};
}

}  // namespace discoh
