#include "qrenorm/qproduct.hpp"

namespace qrenorm {

QMonomial QMonomial::pow(long n) const {
    Rat cc(1);
    for (long i = 0; i < n; ++i) cc *= c;
    return {cc, Rat(e * n)};
}

QProductExpr QProductExpr::times_factor(const Rat& c, const Rat& m, int e) const {
    QProductExpr out = *this;
    out.factors.push_back({c, m, e});
    return out;
}

QProductExpr QProductExpr::times_monomial(const Rat& c, const Rat& e) const {
    QProductExpr out = *this;
    out.coeff *= c;
    out.exp += e;
    return out;
}

QProductExpr QProductExpr::operator*(const QProductExpr& o) const {
    QProductExpr out = *this;
    out.coeff *= o.coeff;
    out.exp += o.exp;
    out.factors.insert(out.factors.end(), o.factors.begin(), o.factors.end());
    return out;
}

QProductExpr QProductExpr::times_pochhammer(const QMonomial& a, long base, long n, int sign_e) const {
    QProductExpr out = *this;
    if (a.is_zero()) return out; // (0; q)_n == 1
    for (long j = 0; j < n; ++j) {
        out.factors.push_back({Rat(-a.c), Rat(a.e + base * j), sign_e});
    }
    return out;
}

QProductExpr qpochhammer(const QMonomial& a, long base, long n) {
    return QProductExpr().times_pochhammer(a, base, n, +1);
}

QProductExpr QProductExpr::normalized() const {
    QProductExpr out;
    out.coeff = coeff;
    out.exp = exp;
    if (coeff == 0) return QProductExpr::zero();
    for (const QFactor& f : factors) {
        if (f.c == 0) {
            if (f.m < 0) throw ZeroFactorCoefficient();
            continue; // factor is identically 1
        }
        if (f.m == 0) {
            Rat v = 1 + f.c;
            if (v == 0) {
                if (f.e > 0) return QProductExpr::zero();
                throw NotExpandable();
            }
            if (f.e > 0) out.coeff *= v;
            else out.coeff /= v;
            continue;
        }
        if (f.m < 0) {
            // (1 + c q^m) = c q^m (1 + (1/c) q^{-m})
            if (f.e > 0) {
                out.coeff *= f.c;
                out.exp += f.m;
            } else {
                out.coeff /= f.c;
                out.exp -= f.m;
            }
            out.factors.push_back({Rat(1 / f.c), Rat(-f.m), f.e});
        } else {
            out.factors.push_back(f);
        }
    }
    return out;
}

bool QProductExpr::is_identically_zero() const {
    if (coeff == 0) return true;
    for (const QFactor& f : factors)
        if (f.e > 0 && f.m == 0 && f.c == -1) return true;
    return false;
}

Rat QProductExpr::valuation() const {
    QProductExpr n = normalized();
    if (n.coeff == 0) throw std::logic_error("zero expression has no valuation");
    return n.exp;
}

TruncatedQSeries QProductExpr::to_series(const Rat& bound) const {
    QProductExpr n = normalized();
    if (n.coeff == 0) return TruncatedQSeries::monomial(Rat(0), Rat(0), bound);
    TruncatedQSeries s = TruncatedQSeries::monomial(n.coeff, n.exp, bound);
    for (const QFactor& f : n.factors) {
        if (s.is_zero()) break;
        if (f.e > 0) s = s.mul_binomial(f.c, f.m);
        else s = s.div_binomial(f.c, f.m);
        s = s.truncated(bound);
    }
    return s.truncated(bound);
}

QProductExpr QProductExpr::subst_qinv() const {
    QProductExpr t;
    t.coeff = coeff;
    t.exp = -exp;
    t.factors.reserve(factors.size());
    for (const QFactor& f : factors) t.factors.push_back({f.c, Rat(-f.m), f.e});
    return t.normalized();
}

QProductExpr QProductExpr::subst_power(long k) const {
    if (k < 1) throw std::invalid_argument("subst_power requires k >= 1");
    QProductExpr t;
    t.coeff = coeff;
    t.exp = exp * k;
    t.factors.reserve(factors.size());
    for (const QFactor& f : factors) t.factors.push_back({f.c, Rat(f.m * k), f.e});
    return t;
}

QProductExpr QProductExpr::subst_negq() const {
    auto sign_for = [](const Rat& e) {
        if (e.get_den() != 1) throw std::invalid_argument("subst_negq requires integer exponents");
        return mpz_odd_p(e.get_num().get_mpz_t()) ? -1 : 1;
    };
    QProductExpr t;
    t.coeff = coeff * sign_for(exp);
    t.exp = exp;
    t.factors.reserve(factors.size());
    for (const QFactor& f : factors) t.factors.push_back({Rat(f.c * sign_for(f.m)), f.m, f.e});
    return t;
}

namespace {

Complex q_power(const Complex& q, const Rat& m) {
    if (m.get_den() == 1 && m.get_num().fits_slong_p())
        return cpow(q, m.get_num().get_si());
    // Principal branch for fractional exponents.
    Real r = q.abs();
    Real theta = atan2(q.im, q.re);
    Real mm = to_real(m);
    Real mag = exp(mm * log(r));
    return exp_i(Real(mm * theta)) * mag;
}

} // namespace

Complex QProductExpr::eval(const Complex& q) const {
    if (coeff == 0) return Complex(Real(0));
    Complex acc = q_power(q, exp) * to_real(coeff);
    Real tol = pow(Real(10), -static_cast<long>(Real::default_precision()) / 2);
    for (const QFactor& f : factors) {
        Complex v = Complex(Real(1)) + q_power(q, f.m) * to_real(f.c);
        if (f.e > 0) {
            acc *= v;
        } else {
            if (v.abs() < tol) throw PoleAtPoint("inverted factor vanishes at evaluation point");
            acc = acc / v;
        }
    }
    return acc;
}

Complex QProductExpr::eval_at_root(const Rat& x) const {
    if (coeff == 0) return Complex(Real(0));
    // Exact vanishing test: 1 + c q^m == 0 at q=e^{2 pi i x} iff c == +-1 and
    // m*x is (an integer plus 1/2) resp. an integer.
    auto vanishes = [&x](const QFactor& f) {
        if (f.c != 1 && f.c != -1) return false;
        Rat mx = f.m * x;
        mx -= Rat(mx.get_num() / mx.get_den()); // fractional part, sign-agnostic below
        if (f.c == -1) return mx == 0;          // q^m == 1
        Rat half(1, 2);
        Rat frac = mx;
        if (frac < 0) frac += 1;
        return frac == half; // q^m == -1
    };
    bool zero_numerator = false;
    for (const QFactor& f : factors) {
        if (vanishes(f)) {
            if (f.e < 0) throw PoleAtPoint("inverted factor vanishes at root of unity");
            zero_numerator = true;
        }
    }
    if (zero_numerator) return Complex(Real(0));
    Complex acc = root_of_unity(Rat(exp * x)) * to_real(coeff);
    for (const QFactor& f : factors) {
        Complex v = Complex(Real(1)) + root_of_unity(Rat(f.m * x)) * to_real(f.c);
        if (f.e > 0) acc *= v;
        else acc = acc / v;
    }
    return acc;
}

} // namespace qrenorm
