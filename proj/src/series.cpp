#include "qrenorm/series.hpp"

#include <algorithm>
#include <sstream>

namespace qrenorm {

namespace {

// Smallest grid containing both 1/d and the rational r exactly.
long grid_for(long d, const Rat& r) {
    Int den = r.get_den();
    if (!den.fits_slong_p()) throw std::overflow_error("exponent denominator too large");
    return lcm_long(d, den.get_si());
}

long num_on_grid(const Rat& r, long d) {
    Rat scaled = r * d;
    if (scaled.get_den() != 1) throw std::logic_error("exponent not on grid");
    Int n = scaled.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("exponent numerator too large");
    return n.get_si();
}

} // namespace

TruncatedQSeries::TruncatedQSeries(long grid_d, long offset_num, std::vector<Rat> coeffs, long bound_num)
    : d_(grid_d), offset_(offset_num), c_(std::move(coeffs)), bound_(bound_num) {
    if (d_ < 1) throw std::invalid_argument("grid denominator must be >= 1");
    if (offset_ + static_cast<long>(c_.size()) > bound_) {
        // Silently truncate anything claimed at or above the bound.
        long keep = bound_ - offset_;
        if (keep < 0) keep = 0;
        c_.resize(static_cast<size_t>(keep));
    }
    canonicalize();
}

TruncatedQSeries TruncatedQSeries::monomial(const Rat& c, const Rat& exp, const Rat& bound) {
    long d = grid_for(1, exp);
    d = grid_for(d, bound);
    long b = num_on_grid(bound, d);
    if (c == 0) return zero(d, b);
    long e = num_on_grid(exp, d);
    if (e >= b) return zero(d, b);
    return TruncatedQSeries(d, e, {c}, b);
}

void TruncatedQSeries::canonicalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        offset_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) offset_ = bound_;
}

Rat TruncatedQSeries::coeff(const Rat& e) const {
    Rat scaled = e * d_;
    if (scaled.get_den() != 1) return Rat(0);
    Int n = scaled.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("exponent too large");
    long idx = n.get_si();
    if (idx >= bound_) throw std::out_of_range("coefficient at or above truncation bound");
    if (idx < offset_ || idx >= offset_ + static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(idx - offset_)];
}

TruncatedQSeries TruncatedQSeries::rescaled(long new_d) const {
    if (new_d == d_) return *this;
    if (new_d % d_ != 0) throw std::invalid_argument("rescale target must be a multiple of the grid");
    long k = new_d / d_;
    TruncatedQSeries out;
    out.d_ = new_d;
    out.offset_ = offset_ * k;
    out.bound_ = bound_ * k;
    if (!c_.empty()) {
        out.c_.assign(c_.size() * static_cast<size_t>(k) - static_cast<size_t>(k) + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<size_t>(k)] = c_[i];
    } else {
        out.offset_ = out.bound_;
    }
    return out;
}

TruncatedQSeries TruncatedQSeries::truncated(const Rat& new_bound) const {
    long d = grid_for(d_, new_bound);
    TruncatedQSeries s = rescaled(d);
    long b = num_on_grid(new_bound, d);
    if (b > s.bound_) b = s.bound_;
    return TruncatedQSeries(s.d_, s.offset_, std::move(s.c_), b);
}

TruncatedQSeries TruncatedQSeries::operator-() const {
    TruncatedQSeries out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

TruncatedQSeries TruncatedQSeries::operator+(const TruncatedQSeries& o) const {
    long d = lcm_long(d_, o.d_);
    TruncatedQSeries a = rescaled(d), b = o.rescaled(d);
    long bound = std::min(a.bound_, b.bound_);
    long lo = std::min(a.c_.empty() ? bound : a.offset_, b.c_.empty() ? bound : b.offset_);
    long hi = std::min(bound, std::max(a.offset_ + static_cast<long>(a.c_.size()),
                                       b.offset_ + static_cast<long>(b.c_.size())));
    if (hi < lo) hi = lo;
    std::vector<Rat> c(static_cast<size_t>(hi - lo), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        long pos = a.offset_ + static_cast<long>(i);
        if (pos >= bound) break;
        c[static_cast<size_t>(pos - lo)] += a.c_[i];
    }
    for (size_t i = 0; i < b.c_.size(); ++i) {
        long pos = b.offset_ + static_cast<long>(i);
        if (pos >= bound) break;
        c[static_cast<size_t>(pos - lo)] += b.c_[i];
    }
    return TruncatedQSeries(d, lo, std::move(c), bound);
}

TruncatedQSeries TruncatedQSeries::operator-(const TruncatedQSeries& o) const {
    return *this + (-o);
}

TruncatedQSeries TruncatedQSeries::operator*(const TruncatedQSeries& o) const {
    long d = lcm_long(d_, o.d_);
    TruncatedQSeries a = rescaled(d), b = o.rescaled(d);
    // a is known mod q^Ba, b mod q^Bb: the product is known mod q^min(Ba+ob, Bb+oa).
    long oa = a.c_.empty() ? a.bound_ : a.offset_;
    long ob = b.c_.empty() ? b.bound_ : b.offset_;
    long bound = std::min(a.bound_ + ob, b.bound_ + oa);
    if (a.c_.empty() || b.c_.empty()) return zero(d, bound);
    long lo = oa + ob;
    long len = bound - lo;
    if (len <= 0) return zero(d, bound);
    std::vector<Rat> c(static_cast<size_t>(len), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        long base = a.offset_ + static_cast<long>(i) + b.offset_ - lo;
        if (base >= len) break;
        size_t jmax = std::min(b.c_.size(), static_cast<size_t>(len - base));
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            c[static_cast<size_t>(base) + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncatedQSeries(d, lo, std::move(c), bound);
}

TruncatedQSeries TruncatedQSeries::scaled(const Rat& k) const {
    if (k == 0) return zero(d_, bound_);
    TruncatedQSeries out = *this;
    for (auto& x : out.c_) x *= k;
    return out;
}

TruncatedQSeries TruncatedQSeries::mul_monomial(const Rat& c, const Rat& e) const {
    long d = grid_for(d_, e);
    TruncatedQSeries s = rescaled(d);
    long shift = num_on_grid(e, d);
    if (c == 0) return zero(d, s.bound_ + shift);
    TruncatedQSeries out = s.scaled(c);
    out.offset_ += shift;
    out.bound_ += shift;
    if (out.c_.empty()) out.offset_ = out.bound_;
    return out;
}

TruncatedQSeries TruncatedQSeries::mul_binomial(const Rat& c, const Rat& m) const {
    long d = grid_for(d_, m);
    TruncatedQSeries a = rescaled(d);
    long shift = num_on_grid(m, d);
    if (shift <= 0) throw std::invalid_argument("mul_binomial requires positive exponent");
    if (a.c_.empty()) return a;
    std::vector<Rat> out(a.c_.size() + static_cast<size_t>(shift), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        out[i] += a.c_[i];
        out[i + static_cast<size_t>(shift)] += c * a.c_[i];
    }
    return TruncatedQSeries(d, a.offset_, std::move(out), a.bound_);
}

TruncatedQSeries TruncatedQSeries::div_binomial(const Rat& c, const Rat& m) const {
    long d = grid_for(d_, m);
    TruncatedQSeries a = rescaled(d);
    long shift = num_on_grid(m, d);
    if (shift <= 0) throw std::invalid_argument("div_binomial requires positive exponent");
    if (a.c_.empty()) return a;
    // Solve (1 + c q^shift) * b = a coefficientwise: b_i = a_i - c*b_{i-shift}.
    long len = a.bound_ - a.offset_;
    std::vector<Rat> b(static_cast<size_t>(len), Rat(0));
    for (long i = 0; i < len; ++i) {
        Rat v = (i < static_cast<long>(a.c_.size())) ? a.c_[static_cast<size_t>(i)] : Rat(0);
        if (i >= shift) v -= c * b[static_cast<size_t>(i - shift)];
        b[static_cast<size_t>(i)] = v;
    }
    return TruncatedQSeries(d, a.offset_, std::move(b), a.bound_);
}

TruncatedQSeries TruncatedQSeries::inverted() const {
    if (c_.empty()) throw ZeroLeadingTerm();
    // Strip the monomial q^(offset/d); invert the unit part to its relative length.
    long len = bound_ - offset_;
    std::vector<Rat> b(static_cast<size_t>(len), Rat(0));
    Rat leadized = c_[0];
    b[0] = 1 / leadized;
    for (long k = 1; k < len; ++k) {
        Rat acc(0);
        size_t jmax = std::min(static_cast<size_t>(k), c_.size() - 1);
        for (size_t j = 1; j <= jmax; ++j) {
            if (c_[j] == 0) continue;
            acc += c_[j] * b[static_cast<size_t>(k) - j];
        }
        b[static_cast<size_t>(k)] = -acc / leadized;
    }
    return TruncatedQSeries(d_, -offset_, std::move(b), bound_ - 2 * offset_);
}

TruncatedQSeries TruncatedQSeries::subst_power(long k) const {
    if (k < 1) throw std::invalid_argument("subst_power requires k >= 1");
    if (k == 1) return *this;
    TruncatedQSeries out;
    out.d_ = d_;
    out.offset_ = offset_ * k;
    out.bound_ = bound_ * k;
    if (c_.empty()) {
        out.offset_ = out.bound_;
        return out;
    }
    out.c_.assign((c_.size() - 1) * static_cast<size_t>(k) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<size_t>(k)] = c_[i];
    return out;
}

TruncatedQSeries TruncatedQSeries::subst_negq() const {
    if (d_ != 1) throw std::invalid_argument("subst_negq requires an integer exponent grid");
    TruncatedQSeries out = *this;
    for (size_t i = 0; i < out.c_.size(); ++i) {
        long e = out.offset_ + static_cast<long>(i);
        if ((e % 2 + 2) % 2 == 1) out.c_[i] = -out.c_[i];
    }
    return out;
}

std::optional<Rat> TruncatedQSeries::first_mismatch(const TruncatedQSeries& a0, const TruncatedQSeries& b0) {
    long d = lcm_long(a0.d_, b0.d_);
    TruncatedQSeries a = a0.rescaled(d), b = b0.rescaled(d);
    long bound = std::min(a.bound_, b.bound_);
    long lo = std::min(a.c_.empty() ? bound : a.offset_, b.c_.empty() ? bound : b.offset_);
    for (long pos = lo; pos < bound; ++pos) {
        Rat xa(0), xb(0);
        if (pos >= a.offset_ && pos < a.offset_ + static_cast<long>(a.c_.size()))
            xa = a.c_[static_cast<size_t>(pos - a.offset_)];
        if (pos >= b.offset_ && pos < b.offset_ + static_cast<long>(b.c_.size()))
            xb = b.c_[static_cast<size_t>(pos - b.offset_)];
        if (xa != xb) return make_rat(Int(pos), Int(d));
    }
    return std::nullopt;
}

std::string TruncatedQSeries::to_json() const {
    std::ostringstream os;
    os << "{\"d\":" << d_ << ",\"offset\":" << offset_ << ",\"bound\":" << bound_ << ",\"coeffs\":[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << "[" << c_[i].get_num().get_str() << "," << c_[i].get_den().get_str() << "]";
    }
    os << "]}";
    return os.str();
}

std::string TruncatedQSeries::to_csv() const {
    std::ostringstream os;
    os << "exponent_num,exponent_den,num,den\n";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        os << (offset_ + static_cast<long>(i)) << "," << d_ << ","
           << c_[i].get_num().get_str() << "," << c_[i].get_den().get_str() << "\n";
    }
    return os.str();
}

std::string TruncatedQSeries::head(size_t max_terms) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    size_t printed = 0;
    for (size_t i = 0; i < c_.size() && printed < max_terms; ++i) {
        if (c_[i] == 0) continue;
        const Rat& x = c_[i];
        if (printed) os << (x > 0 ? " + " : " - ");
        else if (x < 0) os << "-";
        Rat ax = abs(x);
        Rat e = exponent_at(i);
        if (ax != 1 || e == 0) os << ax.get_str();
        if (e != 0) {
            if (ax != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e.get_str();
        }
        ++printed;
    }
    if (printed == max_terms) os << " + ...";
    return os.str();
}

} // namespace qrenorm
