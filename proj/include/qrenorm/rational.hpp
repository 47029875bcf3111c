#pragma once

#include <gmpxx.h>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrenorm {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// If n is a perfect square, store the root and return true.
inline bool is_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

inline long lcm_long(long a, long b) {
    return std::lcm(a, b);
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = gcd(a, b) and Bezout coefficients: g = a*x + b*y.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace qrenorm
