#pragma once

#include "qrenorm/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace qrenorm {

using Real = boost::multiprecision::mpfr_float;

// Scoped override of the working decimal precision.
struct PrecisionGuard {
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real pi_value();
Real euler_gamma();

inline Real to_real(const Rat& r) { return Real(r.get_mpq_t()); }
inline Real to_real(const Int& n) { return Real(n.get_mpz_t()); }

// Minimal complex arithmetic over Real (no mpc in this toolchain).
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r), im(0) {}

    Complex operator-() const { return {-re, -im}; }
    Complex operator+(const Complex& o) const { return {Real(re + o.re), Real(im + o.im)}; }
    Complex operator-(const Complex& o) const { return {Real(re - o.re), Real(im - o.im)}; }
    Complex operator*(const Complex& o) const {
        return {Real(re * o.re - im * o.im), Real(re * o.im + im * o.re)};
    }
    Complex operator/(const Complex& o) const {
        Real n = o.norm2();
        return {Real((re * o.re + im * o.im) / n), Real((im * o.re - re * o.im) / n)};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    Complex operator*(const Real& s) const { return {Real(re * s), Real(im * s)}; }
    Complex operator/(const Real& s) const { return {Real(re / s), Real(im / s)}; }

    Real norm2() const { return Real(re * re + im * im); }
    Real abs() const { return Real(sqrt(norm2())); }
    Complex conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline Complex operator*(const Real& s, const Complex& z) { return z * s; }

// e^(2*pi*i*x) for rational x, computed from the reduced fraction.
Complex root_of_unity(const Rat& x);

// e^(i*theta).
Complex exp_i(const Real& theta);

// Integer power by repeated squaring (n may be negative for nonzero z).
Complex cpow(const Complex& z, long n);

Complex cexp(const Complex& z);

} // namespace qrenorm
