#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace ordspec {

/* Exact arithmetic only: counts and group orders are arbitrary-precision
 * naturals, ratios are rationals kept in lowest terms with positive
 * denominator (mpq_class canonical form). */
using Nat = mpz_class;
using Rational = mpq_class;

inline Nat nat_gcd(const Nat& a, const Nat& b) {
    Nat r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Nat nat_lcm(const Nat& a, const Nat& b) {
    Nat r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Nat& d, const Nat& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Rational make_ratio(const Nat& num, const Nat& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/* Euler's totient. Orders of concrete group elements stay far below
 * 2^64, so trial division is plenty. */
Nat euler_phi(const Nat& n);

std::uint64_t to_u64(const Nat& n);

/* "num/den" in lowest terms; plain "num" when den == 1. */
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& text);

Nat factorial(unsigned n);

} // namespace ordspec
