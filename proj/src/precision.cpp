#include "qrenorm/precision.hpp"

namespace qrenorm {

Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real euler_gamma() {
    Real g;
    mpfr_const_euler(g.backend().data(), MPFR_RNDN);
    return g;
}

Complex exp_i(const Real& theta) {
    return {Real(cos(theta)), Real(sin(theta))};
}

Complex root_of_unity(const Rat& x) {
    Rat r = x;
    r.canonicalize();
    Real theta = 2 * pi_value() * to_real(r);
    return exp_i(theta);
}

Complex cpow(const Complex& z, long n) {
    if (n < 0) return Complex(Real(1)) / cpow(z, -n);
    Complex acc{Real(1), Real(0)};
    Complex base = z;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Complex cexp(const Complex& z) {
    Real m = exp(z.re);
    return {Real(m * cos(z.im)), Real(m * sin(z.im))};
}

} // namespace qrenorm
