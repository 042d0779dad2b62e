#pragma once

#include <optional>
#include <vector>

#include "qseries/coefficient.hpp"
#include "qseries/errors.hpp"

namespace qseries {

/* A signed power of q: sign * q^exponent, sign in {+1, -1}. */
struct Monomial {
    int sign = 1;
    long exponent = 0;

    Monomial() = default;
    Monomial(int sign_, long exponent_) : sign(sign_), exponent(exponent_) {
        if (sign != 1 && sign != -1)
            throw SeriesError("Monomial: sign must be +1 or -1");
    }
};

/**
 * Truncated Laurent series.
 *
 * Coefficients are stored densely for exponents valuation()..order().
 * Exponents below valuation() are exactly zero; exponents above order() are
 * unknown. order() >= valuation() - 1, the empty window being the zero
 * series. Every operation reports only coefficients that truncation cannot
 * have corrupted: in particular mul() tightens the result order to
 * min(a.order + b.valuation, b.order + a.valuation).
 *
 * Values are immutable through the public surface; all operations are pure
 * functions, so series can be shared freely across threads. The one
 * deliberate exception is add_in_place(), meant for locally owned
 * accumulators inside builders.
 */
class TruncSeries {
public:
    /* The zero series with coefficients 0 stored for exponents 0..order. */
    static TruncSeries zero(long order);

    /* The constant series c, window 0..order. */
    static TruncSeries constant(const Coefficient& c, long order);

    /* sign * q^exponent; the zero series when exponent > order. */
    static TruncSeries monomial_series(const Monomial& m, long order);

    /* Window starting at `valuation`, order = valuation + coeffs.size() - 1. */
    static TruncSeries from_coefficients(long valuation, std::vector<Coefficient> coeffs);

    long valuation() const { return val_; }
    long order() const { return order_; }

    /* Exponent of the first nonzero stored coefficient, if any. */
    std::optional<long> effective_valuation() const;

    /* True when all stored coefficients are zero (zero to this order). */
    bool is_zero() const { return !effective_valuation().has_value(); }

    /* Exact coefficient at exponent e; zero below the window.
     * Throws BeyondTruncation for e > order(). */
    const Coefficient& coefficient(long e) const;

    /* True when every stored coefficient is an integer. */
    bool is_integral() const;

    const std::vector<Coefficient>& coefficients() const { return c_; }

private:
    TruncSeries(long val, long order, std::vector<Coefficient> c)
        : val_(val), order_(order), c_(std::move(c)) {}

    Coefficient& at(long e) { return c_[static_cast<size_t>(e - val_)]; }
    const Coefficient& at(long e) const { return c_[static_cast<size_t>(e - val_)]; }
    bool in_window(long e) const { return e >= val_ && e <= order_; }

    long val_;
    long order_; // inclusive; order_ >= val_ - 1
    std::vector<Coefficient> c_;

    friend TruncSeries add(const TruncSeries&, const TruncSeries&);
    friend TruncSeries sub(const TruncSeries&, const TruncSeries&);
    friend TruncSeries mul(const TruncSeries&, const TruncSeries&);
    friend TruncSeries div(const TruncSeries&, const TruncSeries&);
    friend TruncSeries mul_binomial(const TruncSeries&, int, long);
    friend TruncSeries div_binomial(const TruncSeries&, int, long);
    friend void add_in_place(TruncSeries&, const TruncSeries&);
    friend TruncSeries shifted(const TruncSeries&, long);
    friend TruncSeries scaled(const TruncSeries&, const Coefficient&);
    friend TruncSeries substitute_power(const TruncSeries&, long, std::optional<long>);
    friend TruncSeries negate_variable(const TruncSeries&);
    friend TruncSeries unitize(const TruncSeries&, long);
    friend TruncSeries truncated(const TruncSeries&, long);
    friend TruncSeries extended(const TruncSeries&, long);
};

/* Coefficient-wise sum; result order = min of orders, valuation = min of valuations. */
TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);

/* Cauchy product. Result valuation = a.val + b.val and order =
 * min(a.order + b.val, b.order + a.val), the tight bound below which no
 * reported coefficient can be corrupted by either truncation. */
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/* The unique Laurent series c with c*b = a, to the representable order.
 * b must have a nonzero coefficient somewhere in its window; with w the
 * exponent of its first nonzero coefficient, the result has valuation
 * a.valuation - w and order min(a.order - w, b.order - 2w + a.valuation).
 * Throws DegenerateDivisor when b is zero to its full order. */
TruncSeries div(const TruncSeries& a, const TruncSeries& b);

/* s * (1 + sign q^e). The binomial is exact, so the order only moves when
 * e < 0: result order = s.order + min(0, e). O(window) — the workhorse
 * behind every Pochhammer product. */
TruncSeries mul_binomial(const TruncSeries& s, int sign, long e);

/* s / (1 + sign q^e); result order = s.order - min(0, e). For e = 0 the
 * divisor is the constant 1 + sign: sign = -1 raises DegenerateDivisor. */
TruncSeries div_binomial(const TruncSeries& s, int sign, long e);

/* acc += t on acc's window. Requires t.order >= acc.order; extends acc's
 * window downward when t reaches below it. For locally owned accumulators. */
void add_in_place(TruncSeries& acc, const TruncSeries& t);

/* s * q^delta, exact: all exponents and both window ends shift by delta. */
TruncSeries shifted(const TruncSeries& s, long delta);

/* Coefficient-wise multiple c*s; window unchanged. */
TruncSeries scaled(const TruncSeries& s, const Coefficient& c);

/* q -> q^m for m >= 1. Exponent e becomes m*e; order becomes m*s.order,
 * or the caller-specified tighter cap. */
TruncSeries substitute_power(const TruncSeries& s, long m,
                             std::optional<long> order_cap = std::nullopt);

/* q -> -q: the coefficient at exponent e picks up a factor (-1)^e. */
TruncSeries negate_variable(const TruncSeries& s);

/* Sum a_{mn} q^n for s = sum a_n q^n, to order floor(s.order / m).
 * Throws NotAPowerSeries when s has a nonzero coefficient below exponent 0. */
TruncSeries unitize(const TruncSeries& s, long m);

/* Narrows the window to `order` (which must not exceed s.order). */
TruncSeries truncated(const TruncSeries& s, long order);

/* Zero-pads the window up to `order`. Only meaningful for series that are
 * known exactly beyond their stored order (finite Laurent polynomials);
 * callers assert that knowledge by calling this. */
TruncSeries extended(const TruncSeries& s, long order);

/* Exponent of the first coefficient differing between a and b at exponents
 * <= order, treating unstored low exponents as zero; nullopt when equal.
 * Throws InsufficientPrecision when either operand has order < order. */
std::optional<long> first_difference(const TruncSeries& a, const TruncSeries& b, long order);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }
inline TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return div(a, b); }

} // namespace qseries
