#include "qseries/series.hpp"

#include <algorithm>
#include <string>

namespace qseries {

namespace {

const Coefficient kZero{};

long window_len(long val, long order) {
    return order - val + 1; // >= 0 by the class invariant
}

std::string exp_str(long e) { return std::to_string(e); }

/* Nonzero entries of a window, as (exponent, value) pairs. Lets mul and div
 * skip the zero padding that exact polynomials carry, which is what keeps
 * binomial-heavy pipelines at O(window) instead of O(window^2). */
std::vector<std::pair<long, const Coefficient*>> nonzero_entries(const TruncSeries& s) {
    std::vector<std::pair<long, const Coefficient*>> nz;
    for (long e = s.valuation(); e <= s.order(); ++e) {
        const Coefficient& c = s.coefficient(e);
        if (!c.is_zero())
            nz.emplace_back(e, &c);
    }
    return nz;
}

} // namespace

TruncSeries TruncSeries::zero(long order) {
    if (order < -1)
        throw SeriesError("TruncSeries::zero: order must be >= -1");
    return TruncSeries(0, order, std::vector<Coefficient>(static_cast<size_t>(
                                     std::max<long>(0, order + 1))));
}

TruncSeries TruncSeries::constant(const Coefficient& c, long order) {
    TruncSeries s = zero(order);
    if (order >= 0)
        s.at(0) = c;
    return s;
}

TruncSeries TruncSeries::monomial_series(const Monomial& m, long order) {
    if (m.exponent > order)
        return zero(order);
    std::vector<Coefficient> c(static_cast<size_t>(window_len(m.exponent, order)));
    c[0] = Coefficient(m.sign);
    return TruncSeries(m.exponent, order, std::move(c));
}

TruncSeries TruncSeries::from_coefficients(long valuation, std::vector<Coefficient> coeffs) {
    long order = valuation + static_cast<long>(coeffs.size()) - 1;
    return TruncSeries(valuation, order, std::move(coeffs));
}

std::optional<long> TruncSeries::effective_valuation() const {
    for (long e = val_; e <= order_; ++e)
        if (!at(e).is_zero())
            return e;
    return std::nullopt;
}

const Coefficient& TruncSeries::coefficient(long e) const {
    if (e > order_)
        throw BeyondTruncation("coefficient at q^" + exp_str(e) +
                               " requested beyond truncation order " + exp_str(order_));
    if (e < val_)
        return kZero;
    return at(e);
}

bool TruncSeries::is_integral() const {
    for (const Coefficient& c : c_)
        if (!c.is_integer())
            return false;
    return true;
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    long val = std::min(a.val_, b.val_);
    long order = std::min(a.order_, b.order_);
    if (order < val - 1)
        val = order + 1;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));
    for (long e = val; e <= order; ++e) {
        Coefficient& r = c[static_cast<size_t>(e - val)];
        if (a.in_window(e))
            r += a.at(e);
        if (b.in_window(e))
            r += b.at(e);
    }
    return TruncSeries(val, order, std::move(c));
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    long val = std::min(a.val_, b.val_);
    long order = std::min(a.order_, b.order_);
    if (order < val - 1)
        val = order + 1;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));
    for (long e = val; e <= order; ++e) {
        Coefficient& r = c[static_cast<size_t>(e - val)];
        if (a.in_window(e))
            r += a.at(e);
        if (b.in_window(e))
            r -= b.at(e);
    }
    return TruncSeries(val, order, std::move(c));
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    long val = a.val_ + b.val_;
    long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    if (order < val - 1)
        val = order + 1;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));

    auto nza = nonzero_entries(a);
    auto nzb = nonzero_entries(b);
    const auto& outer = (nza.size() <= nzb.size()) ? nza : nzb;
    const TruncSeries& inner = (nza.size() <= nzb.size()) ? b : a;

    for (const auto& [eo, co] : outer) {
        long lo = std::max(inner.val_, val - eo);
        long hi = std::min(inner.order_, order - eo);
        for (long ei = lo; ei <= hi; ++ei) {
            const Coefficient& ci = inner.at(ei);
            if (!ci.is_zero())
                c[static_cast<size_t>(eo + ei - val)] += *co * ci;
        }
    }
    return TruncSeries(val, order, std::move(c));
}

TruncSeries div(const TruncSeries& a, const TruncSeries& b) {
    std::optional<long> wopt = b.effective_valuation();
    if (!wopt)
        throw DegenerateDivisor("div: divisor is zero to its full order " +
                                exp_str(b.order_));
    long w = *wopt;
    const Coefficient& lead = b.at(w);

    long val = a.val_ - w;
    long order = std::min(a.order_ - w, b.order_ - 2 * w + a.val_);
    if (order < val - 1)
        val = order + 1;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));

    /* Nonzero divisor entries above the leading one. */
    std::vector<std::pair<long, const Coefficient*>> tail;
    for (long e = w + 1; e <= b.order_; ++e)
        if (!b.at(e).is_zero())
            tail.emplace_back(e, &b.at(e));

    for (long t = val; t <= order; ++t) {
        Coefficient acc = a.in_window(t + w) ? a.at(t + w) : Coefficient();
        for (const auto& [eb, cb] : tail) {
            long s = t + w - eb;
            if (s < val)
                break; // tail is sorted by exponent, later entries reach lower
            acc -= c[static_cast<size_t>(s - val)] * *cb;
        }
        if (!acc.is_zero())
            acc /= lead;
        c[static_cast<size_t>(t - val)] = std::move(acc);
    }
    return TruncSeries(val, order, std::move(c));
}

TruncSeries mul_binomial(const TruncSeries& s, int sign, long e) {
    if (sign != 1 && sign != -1)
        throw SeriesError("mul_binomial: sign must be +1 or -1");
    if (e == 0) {
        // factor is 1 + sign: either 2 or 0
        return sign == 1 ? scaled(s, Coefficient(2)) : scaled(s, Coefficient(0));
    }
    long val = s.val_ + std::min<long>(0, e);
    long order = s.order_ + std::min<long>(0, e);
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));
    for (long t = val; t <= order; ++t) {
        Coefficient r = s.in_window(t) ? s.at(t) : Coefficient();
        if (s.in_window(t - e)) {
            if (sign == 1)
                r += s.at(t - e);
            else
                r -= s.at(t - e);
        }
        c[static_cast<size_t>(t - val)] = std::move(r);
    }
    return TruncSeries(val, order, std::move(c));
}

TruncSeries div_binomial(const TruncSeries& s, int sign, long e) {
    if (sign != 1 && sign != -1)
        throw SeriesError("div_binomial: sign must be +1 or -1");
    if (e == 0) {
        if (sign == -1)
            throw DegenerateDivisor("div_binomial: divisor 1 - q^0 is zero");
        return scaled(s, Coefficient(1, 2));
    }
    if (e < 0) {
        // 1 + sign q^e = sign q^e (1 + sign q^{-e}); divide out the monomial first.
        TruncSeries t = shifted(s, -e);
        if (sign == -1)
            t = scaled(t, Coefficient(-1));
        return div_binomial(t, sign, -e);
    }
    long val = s.val_;
    long order = s.order_;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));
    // (1 + sign q^e) c = s  =>  c_t = s_t - sign c_{t-e}
    for (long t = val; t <= order; ++t) {
        Coefficient r = s.at(t);
        if (t - e >= val) {
            if (sign == 1)
                r -= c[static_cast<size_t>(t - e - val)];
            else
                r += c[static_cast<size_t>(t - e - val)];
        }
        c[static_cast<size_t>(t - val)] = std::move(r);
    }
    return TruncSeries(val, order, std::move(c));
}

void add_in_place(TruncSeries& acc, const TruncSeries& t) {
    if (t.order_ < acc.order_)
        throw InsufficientPrecision("add_in_place: increment order " + exp_str(t.order_) +
                                    " below accumulator order " + exp_str(acc.order_));
    if (t.val_ < acc.val_) {
        std::vector<Coefficient> widened(static_cast<size_t>(window_len(t.val_, acc.order_)));
        std::move(acc.c_.begin(), acc.c_.end(),
                  widened.begin() + static_cast<size_t>(acc.val_ - t.val_));
        acc.c_ = std::move(widened);
        acc.val_ = t.val_;
    }
    long hi = std::min(acc.order_, t.order_);
    for (long e = std::max(acc.val_, t.val_); e <= hi; ++e)
        acc.at(e) += t.at(e);
}

TruncSeries shifted(const TruncSeries& s, long delta) {
    return TruncSeries(s.val_ + delta, s.order_ + delta, s.c_);
}

TruncSeries scaled(const TruncSeries& s, const Coefficient& c) {
    std::vector<Coefficient> r(s.c_.size());
    for (size_t i = 0; i < s.c_.size(); ++i)
        r[i] = s.c_[i] * c;
    return TruncSeries(s.val_, s.order_, std::move(r));
}

TruncSeries substitute_power(const TruncSeries& s, long m, std::optional<long> order_cap) {
    if (m < 1)
        throw SeriesError("substitute_power: exponent multiplier must be >= 1");
    long order = m * s.order_;
    if (order_cap && *order_cap < order)
        order = *order_cap;
    long val = m * s.val_;
    if (order < val - 1)
        val = order + 1;
    std::vector<Coefficient> c(static_cast<size_t>(window_len(val, order)));
    for (long e = s.val_; e <= s.order_ && m * e <= order; ++e)
        c[static_cast<size_t>(m * e - val)] = s.at(e);
    return TruncSeries(val, order, std::move(c));
}

TruncSeries negate_variable(const TruncSeries& s) {
    std::vector<Coefficient> c(s.c_.size());
    for (long e = s.val_; e <= s.order_; ++e) {
        const Coefficient& v = s.at(e);
        c[static_cast<size_t>(e - s.val_)] = (e % 2 != 0) ? -v : v;
    }
    return TruncSeries(s.val_, s.order_, std::move(c));
}

TruncSeries unitize(const TruncSeries& s, long m) {
    if (m < 1)
        throw SeriesError("unitize: degree must be >= 1");
    std::optional<long> ev = s.effective_valuation();
    if (ev && *ev < 0)
        throw NotAPowerSeries("unitize: nonzero coefficient at q^" + exp_str(*ev));
    long order = s.order_ >= 0 ? s.order_ / m : -1;
    std::vector<Coefficient> c(static_cast<size_t>(std::max<long>(0, order + 1)));
    for (long n = 0; n <= order; ++n)
        if (s.in_window(m * n))
            c[static_cast<size_t>(n)] = s.at(m * n);
    return TruncSeries(0, order, std::move(c));
}

TruncSeries truncated(const TruncSeries& s, long order) {
    if (order > s.order_)
        throw InsufficientPrecision("truncated: requested order " + exp_str(order) +
                                    " above stored order " + exp_str(s.order_));
    long val = s.val_;
    if (order < val - 1)
        return TruncSeries(order + 1, order, {});
    std::vector<Coefficient> c(s.c_.begin(),
                               s.c_.begin() + static_cast<size_t>(window_len(val, order)));
    return TruncSeries(val, order, std::move(c));
}

TruncSeries extended(const TruncSeries& s, long order) {
    if (order <= s.order_)
        return s;
    std::vector<Coefficient> c = s.c_;
    c.resize(static_cast<size_t>(window_len(s.val_, order)));
    return TruncSeries(s.val_, order, std::move(c));
}

std::optional<long> first_difference(const TruncSeries& a, const TruncSeries& b, long order) {
    if (a.order() < order || b.order() < order)
        throw InsufficientPrecision(
            "first_difference: comparison to order " + exp_str(order) +
            " but operands carry orders " + exp_str(a.order()) + " and " + exp_str(b.order()));
    for (long e = std::min(a.valuation(), b.valuation()); e <= order; ++e)
        if (a.coefficient(e) != b.coefficient(e))
            return e;
    return std::nullopt;
}

} // namespace qseries
