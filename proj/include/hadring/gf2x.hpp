#pragma once

// Arithmetic on polynomials over F_2 packed into a single machine word
// (bit i holds the coefficient of u^i).

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hadring::gf2x {

using Word = std::uint64_t;

/// Degree of p, or -1 for the zero polynomial.
constexpr int degree(Word p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

/// Remainder of a modulo a nonzero b.
constexpr Word reduce(Word a, Word b) noexcept {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

/// Quotient and remainder of a / b, b nonzero.
constexpr std::pair<Word, Word> divmod(Word a, Word b) noexcept {
  const int db = degree(b);
  Word q = 0;
  for (int da = degree(a); da >= db; da = degree(a)) {
    q |= Word{1} << (da - db);
    a ^= b << (da - db);
  }
  return {q, a};
}

constexpr Word gcd(Word a, Word b) noexcept {
  while (b != 0) {
    a = reduce(a, b);
    std::swap(a, b);
  }
  return a;
}

/// a * b mod `modulus`, where deg(modulus) = m <= 63 and a, b are reduced.
constexpr Word mulmod(Word a, Word b, Word modulus, unsigned m) noexcept {
  const Word top = Word{1} << m;
  Word r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

/// Inverse of a modulo `modulus` by the extended Euclidean algorithm;
/// nullopt when gcd(a, modulus) != 1.
constexpr std::optional<Word> invmod(Word a, Word modulus) noexcept {
  const unsigned m = static_cast<unsigned>(degree(modulus));
  Word r0 = modulus, r1 = reduce(a, modulus);
  Word s0 = 0, s1 = 1;
  while (r1 != 0) {
    auto [q, r] = divmod(r0, r1);
    // s0 - q*s1 computed modulo `modulus`; q has degree < m here except on
    // the first step, so reduce it first.
    const Word qs = mulmod(reduce(q, modulus), s1, modulus, m);
    const Word s = s0 ^ qs;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (r0 != 1) return std::nullopt;
  return s0;
}

/// Rabin's test: f of degree n is irreducible iff u^(2^n) = u (mod f) and
/// gcd(u^(2^(n/p)) - u, f) = 1 for every prime p dividing n.
inline bool is_irreducible(Word f) {
  const int n = degree(f);
  if (n < 1 || n > 63) return false;
  const unsigned m = static_cast<unsigned>(n);
  const Word u = reduce(Word{2}, f);
  auto frobenius_power = [&](unsigned times) {
    Word x = u;
    for (unsigned i = 0; i < times; ++i) x = mulmod(x, x, f, m);
    return x;
  };
  if (frobenius_power(m) != u) return false;
  std::vector<unsigned> primes;
  unsigned rest = m;
  for (unsigned p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);
  for (unsigned p : primes) {
    if (gcd(frobenius_power(m / p) ^ u, f) != 1) return false;
  }
  return true;
}

}  // namespace hadring::gf2x
