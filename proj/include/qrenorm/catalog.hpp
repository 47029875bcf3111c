#pragma once

#include "qrenorm/qproduct.hpp"

#include <functional>
#include <string>

namespace qrenorm {

struct NonConvergentParameters : std::runtime_error {
    explicit NonConvergentParameters(const std::string& what) : std::runtime_error(what) {}
};

enum class NamedSeriesId {
    SIGMA,
    SIGMA_STAR,
    W,
    SW,
    W1,
    W2,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    LL,
    L,
    GHOST_SIGMA,
    GHOST_W,
    GHOST_SW,
    CHALLENGE_TAIL,
};

const char* series_name(NamedSeriesId id);
// Parse "SIGMA", "sigma", "SW", ... ; returns false on unknown name.
bool parse_series_id(const std::string& name, NamedSeriesId& out);

// An indexed term family n |-> closed-form term, with the data needed to
// truncate sums and to renormalize.
struct SeriesFamily {
    std::string name;
    long n_start = 0;
    std::function<QProductExpr(long)> term;
    // Guaranteed lower bound for the valuation of term(n); nondecreasing and
    // unbounded, so that truncated summation terminates.
    std::function<Rat(long)> val_lower_bound;
    // Expansion of H_infinity(q^{-1}) = lim_n term_n(q^{-1}), when the family
    // admits the renormalization construction.
    std::function<TruncatedQSeries(const Rat&)> limit_qinv;

    bool has_limit() const { return static_cast<bool>(limit_qinv); }
};

const SeriesFamily& family(NamedSeriesId id);

// Sum of a term family, exact modulo q^bound.  n_used (if nonnull) receives
// the number of terms taken before the valuation cutoff.
TruncatedQSeries sum_family(const SeriesFamily& fam, const Rat& bound, long* n_used = nullptr);

// Exact expansion of any catalogued series (term families and ghost closed
// forms) modulo q^bound.
TruncatedQSeries build_series(NamedSeriesId id, const Rat& bound);

// prod_{j >= 0} (1 + c q^{start + step*j})^e, truncated at q^bound.
struct ProductProgression {
    Rat c;
    long start;
    long step;
    int e;
};
TruncatedQSeries infinite_product(const Rat& prefactor, const std::vector<ProductProgression>& ps,
                                  const Rat& bound);

// sum_{j >= 0} q^m / (1 - s q^m) over m = start + step*j, with s = +1 or -1
// (Lambert-type sum; expands termwise as sum_k s^{k-1} q^{mk}).
TruncatedQSeries lambert_sum(int s, long start, long step, const Rat& bound);

// Numeric counterparts for |q| < 1, truncated when |q|^m drops below the
// working precision.
Complex infinite_product_eval(const Rat& prefactor, const std::vector<ProductProgression>& ps,
                              const Complex& q);
Complex lambert_sum_eval(int s, long start, long step, const Complex& q);

// Abel-regularized alternating sum: sum_{n>=n0} (-1)^(n-n0) c_n where
// c_n -> limit coefficientwise.  Returns sum (-1)^(n-n0) (c_n - limit) +
// limit/2, the analytic-continuation value.
TruncatedQSeries alternating_regularized(long n0, const std::function<QProductExpr(long)>& term,
                                         const TruncatedQSeries& limit, const Rat& bound);

// Fine's basic hypergeometric series F(a,b;t : q^base) =
// sum_n ((aQ;Q)_n / (bQ;Q)_n) t^n with Q = q^base and monomial parameters.
// t = -1 is handled by Abel regularization; parameter combinations whose term
// valuations do not grow (and do not terminate) raise NonConvergentParameters.
TruncatedQSeries fine_F(const QMonomial& a, const QMonomial& b, const QMonomial& t, long base,
                        const Rat& bound);

} // namespace qrenorm
