#pragma once

#include "qrenorm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrenorm {

struct ZeroLeadingTerm : std::runtime_error {
    ZeroLeadingTerm() : std::runtime_error("series_invert: leading term is zero up to truncation bound") {}
};

// Exact truncated Laurent/Puiseux series over Q.
//
// The series lives on the exponent grid (1/grid_d)*Z.  With numerator offset o
// and coefficients c_0..c_{L-1} it represents
//
//     sum_i c_i * q^((o+i)/grid_d),
//
// and is known modulo q^(bound/grid_d) (coefficients at exponents >= bound/grid_d
// are unknown, coefficients below it and not stored are exactly zero).
//
// Canonical form: c is empty with offset == bound for the zero series; otherwise
// c.front() != 0 and c.back() != 0.  Values are immutable in spirit: all
// operations return new series.
class TruncatedQSeries {
public:
    TruncatedQSeries() : d_(1), offset_(0), bound_(0) {}

    static TruncatedQSeries zero(long grid_d, long bound_num) {
        TruncatedQSeries s;
        s.d_ = grid_d;
        s.offset_ = bound_num;
        s.bound_ = bound_num;
        return s;
    }

    // c * q^(exp), known below `bound` (both exponents as exact rationals).
    static TruncatedQSeries monomial(const Rat& c, const Rat& exp, const Rat& bound);

    static TruncatedQSeries one(const Rat& bound) { return monomial(Rat(1), Rat(0), bound); }

    // Raw constructor on an explicit grid.
    TruncatedQSeries(long grid_d, long offset_num, std::vector<Rat> coeffs, long bound_num);

    long grid_denominator() const { return d_; }
    long offset_num() const { return offset_; }
    long bound_num() const { return bound_; }
    Rat bound() const { return make_rat(Int(bound_), Int(d_)); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }

    Rat exponent_at(size_t i) const { return make_rat(Int(offset_ + static_cast<long>(i)), Int(d_)); }

    // Lowest exponent with nonzero coefficient (zero series has no valuation).
    std::optional<Rat> valuation() const {
        if (c_.empty()) return std::nullopt;
        return exponent_at(0);
    }

    // Coefficient at exponent e; requires e < bound.
    Rat coeff(const Rat& e) const;

    TruncatedQSeries rescaled(long new_d) const;
    TruncatedQSeries truncated(const Rat& new_bound) const;

    TruncatedQSeries operator-() const;
    TruncatedQSeries operator+(const TruncatedQSeries& o) const;
    TruncatedQSeries operator-(const TruncatedQSeries& o) const;
    TruncatedQSeries operator*(const TruncatedQSeries& o) const;
    TruncatedQSeries scaled(const Rat& k) const;

    // Multiply / divide by the sparse binomial (1 + c*q^m), m > 0 on some grid.
    TruncatedQSeries mul_binomial(const Rat& c, const Rat& m) const;
    TruncatedQSeries div_binomial(const Rat& c, const Rat& m) const;

    // Multiply by c*q^e.
    TruncatedQSeries mul_monomial(const Rat& c, const Rat& e) const;

    // Multiplicative inverse (leading coefficient must be nonzero).
    TruncatedQSeries inverted() const;

    // q -> q^k, k >= 1.
    TruncatedQSeries subst_power(long k) const;

    // q -> -q; requires all exponents and the bound to be integers.
    TruncatedQSeries subst_negq() const;

    bool operator==(const TruncatedQSeries& o) const { return !first_mismatch(*this, o); }

    // First exponent (below the smaller bound) where the two series differ.
    static std::optional<Rat> first_mismatch(const TruncatedQSeries& a, const TruncatedQSeries& b);

    std::string to_json() const;
    std::string to_csv() const;
    // Short human-readable head, up to `max_terms` terms.
    std::string head(size_t max_terms = 12) const;

private:
    void canonicalize();

    long d_;
    long offset_;
    std::vector<Rat> c_;
    long bound_;
};

} // namespace qrenorm
