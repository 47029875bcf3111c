#pragma once

#include "qrenorm/precision.hpp"
#include "qrenorm/series.hpp"

#include <vector>

namespace qrenorm {

struct NotExpandable : std::runtime_error {
    NotExpandable() : std::runtime_error("expression is not power-series expandable") {}
};
struct PoleAtPoint : std::runtime_error {
    explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroFactorCoefficient : std::runtime_error {
    ZeroFactorCoefficient() : std::runtime_error("cannot normalize factor with zero coefficient and negative exponent") {}
};

// One binomial factor (1 + c*q^m)^e with e = +1 or -1.
struct QFactor {
    Rat c;
    Rat m;
    int e;
};

// A monomial coefficient*q^exponent, used for series parameters (a, b, t).
struct QMonomial {
    Rat c;
    Rat e;

    QMonomial() : c(0), e(0) {}
    QMonomial(Rat coeff, Rat exp) : c(std::move(coeff)), e(std::move(exp)) {}
    static QMonomial zero() { return {Rat(0), Rat(0)}; }
    bool is_zero() const { return c == 0; }
    QMonomial subst_power(long k) const { return {c, Rat(e * k)}; }
    QMonomial inverse() const { return {Rat(1 / c), Rat(-e)}; }
    QMonomial operator*(const QMonomial& o) const { return {Rat(c * o.c), Rat(e + o.e)}; }
    QMonomial pow(long n) const;
};

// prefactor_coeff * q^prefactor_exp * prod (1 + c_i q^{m_i})^{e_i}.
//
// The closed form of a single series term.  Immutable by convention; the
// builder methods return modified copies.
class QProductExpr {
public:
    Rat coeff;
    Rat exp;
    std::vector<QFactor> factors;

    QProductExpr() : coeff(1), exp(0) {}

    static QProductExpr monomial(const Rat& c, const Rat& e) {
        QProductExpr x;
        x.coeff = c;
        x.exp = e;
        return x;
    }
    static QProductExpr zero() { return monomial(Rat(0), Rat(0)); }

    QProductExpr times_factor(const Rat& c, const Rat& m, int e) const;
    QProductExpr times_monomial(const Rat& c, const Rat& e) const;
    QProductExpr operator*(const QProductExpr& o) const;

    // Pochhammer block (a; q^base)_n expressed through monomial a = ac*q^ae:
    // multiplies by prod_{j=0}^{n-1} (1 - a q^{base*j})^{sign_e}.
    QProductExpr times_pochhammer(const QMonomial& a, long base, long n, int sign_e) const;

    // Rewrite so that every factor has m > 0 (constants folded into the
    // prefactor).  Exact as a rational expression.  A zero expression comes
    // back as coeff == 0 with no factors.
    QProductExpr normalized() const;

    bool is_identically_zero() const;

    // Lowest q-exponent of the expansion (normalized, nonzero expressions).
    Rat valuation() const;

    // Exact expansion modulo q^bound.
    TruncatedQSeries to_series(const Rat& bound) const;

    // q -> q^{-1}, normalized to positive factor exponents.
    QProductExpr subst_qinv() const;
    // q -> q^k.
    QProductExpr subst_power(long k) const;
    // q -> -q (integer exponents only).
    QProductExpr subst_negq() const;

    // Numeric evaluation at a complex point (principal powers for fractional
    // exponents).  Factors that vanish within tolerance raise PoleAtPoint.
    Complex eval(const Complex& q) const;

    // Evaluation at q = e^{2*pi*i*x} with exact pole detection for each factor.
    Complex eval_at_root(const Rat& x) const;
};

// (a; q^base)_n as a standalone expression.
QProductExpr qpochhammer(const QMonomial& a, long base, long n);

} // namespace qrenorm
