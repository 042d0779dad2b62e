#include "qseries/aeb.hpp"

namespace qseries {

namespace {

std::string num(long v) { return std::to_string(v); }

void require_integral(const TruncSeries& s, const std::string& what) {
    if (!s.is_integral())
        throw IntegralityError(what + ": fractional coefficient in a series that must be integral");
}

TruncSeries checked(TruncSeries s, const std::string& what) {
    require_integral(s, what);
    return s;
}

/* (q^{e}; q^2)_n at `order`, the everyday factor around here. */
TruncSeries poch2(long e, long n, long order) {
    return pochhammer(PochSpec::finite(qpow(e), 2, n), order);
}

TruncSeries poch2_inf(long e, long order) {
    return pochhammer(PochSpec::infinite(qpow(e), 2), order);
}

TruncSeries f_product(long k, long order) {
    // X_n = (q^{2n+2}, q^{2n+2k}; q^2)_inf / (q^{2n+1}; q^2)_inf^2, stepped by
    // X_{n+1} = X_n (1-q^{2n+1})^2 / ((1-q^{2n+2})(1-q^{2n+2k})).
    TruncSeries x = div(multi_pochhammer({PochSpec::infinite(qpow(2), 2),
                                          PochSpec::infinite(qpow(2 * k), 2)},
                                         order),
                        mul(poch2_inf(1, order), poch2_inf(1, order)));
    TruncSeries acc = TruncSeries::zero(order);
    for (long n = 0; 2 * n <= order; ++n) {
        add_in_place(acc, shifted(x, 2 * n));
        x = mul_binomial(mul_binomial(x, -1, 2 * n + 1), -1, 2 * n + 1);
        x = div_binomial(div_binomial(x, -1, 2 * n + 2), -1, 2 * n + 2 * k);
    }
    return acc;
}

TruncSeries f_bbk(long k, long order) {
    // term_n = (q^{2k-1};q^2)_n q^n / (q;q^2)_{n+1}, stepped by
    // term_n = term_{n-1} q (1 - q^{2k-3+2n}) / (1 - q^{2n+1}), run in place
    // on one buffer: term[j] holds the coefficient of q^{n+j}, so the window
    // shrinks by one slot per step and nothing is reallocated.
    std::vector<Coefficient> acc(static_cast<size_t>(order + 1), Coefficient(1));
    std::vector<Coefficient> term = acc; // term_0 = 1/(1-q) = 1 + q + q^2 + ...
    for (long n = 1; n <= order; ++n) {
        long len = static_cast<long>(term.size());
        long e1 = 2 * k - 3 + 2 * n;
        for (long j = len - 1; j >= e1; --j)
            term[static_cast<size_t>(j)] -= term[static_cast<size_t>(j - e1)];
        term.pop_back(); // the q shift pushes the top entry past the order
        --len;
        long e2 = 2 * n + 1;
        for (long j = e2; j < len; ++j)
            term[static_cast<size_t>(j)] += term[static_cast<size_t>(j - e2)];
        for (long j = 0; j < len; ++j)
            acc[static_cast<size_t>(n + j)] += term[static_cast<size_t>(j)];
    }
    return TruncSeries::from_coefficients(0, std::move(acc));
}

/* The CW summand at index n, truncated to `order`:
 * [k-2, n]_{q^2} (q^2;q^2)_n q^{2n^2+2n} / (q;q^2)_{n+1}^2. */
TruncSeries cw_summand(long k, long n, long order) {
    long shift = 2 * n * n + 2 * n;
    if (shift > order)
        return TruncSeries::zero(order);
    TruncSeries numr = mul(q_binomial(k - 2, n, 2, order), poch2(2, n, order));
    TruncSeries den = poch2(1, n + 1, order);
    TruncSeries t = div(numr, mul(den, den));
    return truncated(shifted(t, shift), order);
}

TruncSeries f_cw(long k, long order) {
    TruncSeries acc = TruncSeries::zero(order);
    for (long n = 0; n <= k - 2 && 2 * n * n + 2 * n <= order; ++n)
        add_in_place(acc, extended(cw_summand(k, n, order), order));
    return acc;
}

TruncSeries f_lambert(long order) {
    TruncSeries acc = TruncSeries::zero(order);
    for (long n = 0; n <= order; ++n)
        add_in_place(acc, div_binomial(TruncSeries::monomial_series(qpow(n), order), -1, 2 * n + 1));
    return acc;
}

TruncSeries f_phi(long k, long order) {
    TruncSeries numr = mul(poch2_inf(2, order), poch2_inf(2, order));
    TruncSeries den = mul(mul(poch2_inf(1, order), poch2_inf(1, order)),
                          poch2(2, k - 1, order));
    PhiSpec spec{{qpow(1), qpow(1)}, {qpow(2 * k)}, 2, qpow(2), std::nullopt};
    return mul(div(numr, den), phi(spec, order));
}

} // namespace

std::string_view to_string(FkForm form) {
    switch (form) {
    case FkForm::Product: return "product";
    case FkForm::BBK: return "bbk";
    case FkForm::CW: return "cw";
    case FkForm::Lambert: return "lambert";
    case FkForm::Phi: return "phi";
    }
    return "?";
}

std::optional<FkForm> fk_form_from_string(std::string_view name) {
    if (name == "product") return FkForm::Product;
    if (name == "bbk") return FkForm::BBK;
    if (name == "cw") return FkForm::CW;
    if (name == "lambert") return FkForm::Lambert;
    if (name == "phi") return FkForm::Phi;
    return std::nullopt;
}

TruncSeries f_k1(long k, FkForm form, long order) {
    if (k < 1)
        throw InvalidForm("f_k1: k must be >= 1, got " + num(k));
    switch (form) {
    case FkForm::Product:
        return checked(f_product(k, order), "f_k1 product");
    case FkForm::BBK:
        return checked(f_bbk(k, order), "f_k1 bbk");
    case FkForm::CW:
        if (k < 2)
            throw InvalidForm("f_k1: the CW form needs k >= 2, got k = " + num(k));
        return checked(f_cw(k, order), "f_k1 cw");
    case FkForm::Lambert:
        if (k != 1)
            throw InvalidForm("f_k1: the Lambert form is the k = 1 case, got k = " + num(k));
        return checked(f_lambert(order), "f_k1 lambert");
    case FkForm::Phi:
        return checked(f_phi(k, order), "f_k1 phi");
    }
    throw InvalidForm("f_k1: unknown form");
}

TruncSeries ratio(long n, long order) {
    if (n < 1)
        throw SeriesError("ratio: n must be >= 1");
    TruncSeries den = poch2(1, n, order);
    return checked(div(poch2(2, n, order), mul(den, den)), "ratio");
}

TruncSeries ratio_corollary(long n, long order) {
    if (n < 0)
        throw SeriesError("ratio_corollary: n must be >= 0");
    TruncSeries den = poch2(1, n + 1, order);
    return checked(div(poch2(2, n, order), mul(den, den)), "ratio_corollary");
}

Decomposition decompose_ratio(long n, long order) {
    if (n < 1)
        throw SeriesError("decompose_ratio: n must be >= 1");
    Decomposition d{ratio(n, order), {}, {}};
    for (long i = 0; i <= n; ++i) {
        TruncSeries den = mul(poch2(2 * i + 1, n - i, order), poch2(2 * (n - i) + 1, i, order));
        TruncSeries s = truncated(shifted(div(q_binomial(n, i, 2, order), den), i), order);
        require_integral(s, "decompose_ratio summand " + num(i));
        d.summands.push_back(std::move(s));
        d.labels.push_back("i=" + num(i) + ": [" + num(n) + "," + num(i) + "]_{q^2} q^" + num(i) +
                           " / ((q^" + num(2 * i + 1) + ";q^2)_" + num(n - i) +
                           " (q^" + num(2 * (n - i) + 1) + ";q^2)_" + num(i) + ")");
    }
    return d;
}

Decomposition decompose_cw(long k, long order) {
    if (k < 2)
        throw InvalidForm("decompose_cw: k must be >= 2");
    Decomposition d{f_k1(k, FkForm::BBK, order), {}, {}};
    for (long n = 0; n <= k - 2; ++n) {
        TruncSeries s = extended(cw_summand(k, n, order), order);
        require_integral(s, "decompose_cw summand " + num(n));
        d.summands.push_back(std::move(s));
        d.labels.push_back("n=" + num(n) + ": [" + num(k - 2) + "," + num(n) +
                           "]_{q^2} (q^2;q^2)_" + num(n) + " q^" + num(2 * n * n + 2 * n) +
                           " / (q;q^2)_" + num(n + 1) + "^2");
    }
    return d;
}

Decomposition one_substitution(long m, long order) {
    if (m < 0)
        throw SeriesError("one_substitution: m must be >= 0");
    Decomposition d{TruncSeries::constant(1, order), {}, {}};
    // summand_0 = (q;q^2)_m / (q^2;q^2)_m; thereafter
    // summand_{i+1} = summand_i q (1-q^{2i+1})(1-q^{2(m-i)}) / ((1-q^{2i+2})(1-q^{2(m-i)-1})).
    TruncSeries s = div(poch2(1, m, order), poch2(2, m, order));
    for (long i = 0;; ++i) {
        require_integral(s, "one_substitution summand " + num(i));
        d.summands.push_back(s);
        d.labels.push_back("i=" + num(i) + ": (q;q^2)_" + num(i) + " (q;q^2)_" + num(m - i) +
                           " q^" + num(i) + " / ((q^2;q^2)_" + num(i) + " (q^2;q^2)_" +
                           num(m - i) + ")");
        if (i == m)
            break;
        s = mul_binomial(mul_binomial(s, -1, 2 * i + 1), -1, 2 * (m - i));
        s = div_binomial(div_binomial(shifted(s, 1), -1, 2 * i + 2), -1, 2 * (m - i) - 1);
    }
    return d;
}

std::pair<TruncSeries, TruncSeries> chu_vandermonde_instance(long m, long order) {
    if (m < 0)
        throw SeriesError("chu_vandermonde_instance: m must be >= 0");
    PhiSpec spec{{qpow(1), qpow(-2 * m)}, {qpow(1 - 2 * m)}, 2, qpow(2), std::nullopt};
    TruncSeries left = phi(spec, order);
    TruncSeries right = div(poch2(2, m, order), poch2(1, m, order));
    require_integral(left, "chu_vandermonde left");
    require_integral(right, "chu_vandermonde right");
    return {std::move(left), std::move(right)};
}

std::pair<TruncSeries, TruncSeries> heine_instance(long k, long order) {
    if (k < 1)
        throw SeriesError("heine_instance: k must be >= 1");
    PhiSpec lhs{{qpow(1), qpow(1)}, {qpow(2 * k)}, 2, qpow(2), std::nullopt};
    TruncSeries left = phi(lhs, order);

    TruncSeries pre = div(multi_pochhammer({PochSpec::infinite(qpow(1), 2),
                                            PochSpec::infinite(qpow(3), 2)},
                                           order),
                          multi_pochhammer({PochSpec::infinite(qpow(2 * k), 2),
                                            PochSpec::infinite(qpow(2), 2)},
                                           order));
    PhiSpec rhs{{qpow(2 * k - 1), qpow(2)}, {qpow(3)}, 2, qpow(1), std::nullopt};
    TruncSeries right = mul(pre, phi(rhs, order));
    require_integral(left, "heine left");
    require_integral(right, "heine right");
    return {std::move(left), std::move(right)};
}

std::pair<TruncSeries, TruncSeries> fine_instance(long k, long order) {
    if (k < 2)
        throw SeriesError("fine_instance: k must be >= 2");
    PhiSpec lhs{{qpow(2), qpow(2 * k - 1)}, {qpow(3)}, 2, qpow(1), std::nullopt};
    TruncSeries left = phi(lhs, order);

    TruncSeries acc = TruncSeries::zero(order);
    for (long n = 0; n <= k - 2; ++n) {
        long shift = (2 * k - 2) * n + n * n + n; // (-q^{2k-2})^n q^{n^2+n} exponent
        TruncSeries numr = pochhammer(PochSpec::finite(qpow(4 - 2 * k), 2, n), order);
        if (n % 2 != 0)
            numr = scaled(numr, Coefficient(-1));
        TruncSeries den = poch2(3, n, order);
        TruncSeries t = div(shifted(numr, shift), mul(den, den));
        add_in_place(acc, t);
    }
    TruncSeries right = div_binomial(acc, -1, 1);
    require_integral(left, "fine left");
    require_integral(right, "fine right");
    return {std::move(left), std::move(right)};
}

std::pair<TruncSeries, TruncSeries> pochhammer_reversal(long m, long i, long order) {
    if (m < 0 || i < 0 || i > m)
        throw SeriesError("pochhammer_reversal: need 0 <= i <= m");
    TruncSeries left = div(poch2(1, m - i, order), poch2(2, m - i, order));

    // (q^{-2m};q^2)_i / (q^{1-2m};q^2)_i is a Laurent ratio of valuation -i;
    // build both exact polynomials wide enough for the quotient to reach
    // order + i before the q^i shift.
    long va = i * (i - 1 - 2 * m);
    long vb = i * (i - 2 * m);
    long wide = order + i + (-va) + (-vb);
    TruncSeries lau = div(pochhammer(PochSpec::finite(qpow(-2 * m), 2, i), wide),
                          pochhammer(PochSpec::finite(qpow(1 - 2 * m), 2, i), wide));
    TruncSeries base = div(poch2(1, m, order + i), poch2(2, m, order + i));
    TruncSeries right = truncated(mul(base, shifted(lau, i)), order);
    require_integral(left, "pochhammer_reversal left");
    require_integral(right, "pochhammer_reversal right");
    return {std::move(left), std::move(right)};
}

std::pair<TruncSeries, TruncSeries> binomial_rewrite(long k, long n, long order) {
    if (k < 2 || n < 0 || n > k - 2)
        throw SeriesError("binomial_rewrite: need k >= 2 and 0 <= n <= k-2");
    TruncSeries left = extended(pochhammer(PochSpec::finite(qpow(4 - 2 * k), 2, n), 0), order);

    long deg_qb = 2 * n * (k - 2 - n);
    long deg_p = n * (n + 1);
    TruncSeries qb = q_binomial(k - 2, n, 2, deg_qb + deg_p);
    TruncSeries pz = pochhammer(PochSpec::finite(qpow(2), 2, n), deg_qb + deg_p);
    TruncSeries right = mul(qb, pz);
    if (n % 2 != 0)
        right = scaled(right, Coefficient(-1));
    right = extended(shifted(right, (4 - 2 * k) * n + n * n - n), order);
    require_integral(left, "binomial_rewrite left");
    require_integral(right, "binomial_rewrite right");
    return {std::move(left), std::move(right)};
}

TruncSeries nu(long order) {
    // term_n = q^{n(n+1)} / (q;q^2)_{n+1}; term_{n+1} = term_n q^{2n+2} / (1-q^{2n+3}).
    TruncSeries term = div_binomial(TruncSeries::constant(1, order), -1, 1);
    TruncSeries acc = TruncSeries::zero(order);
    for (long n = 0;; ++n) {
        add_in_place(acc, term);
        if ((n + 1) * (n + 2) > order)
            break;
        term = div_binomial(shifted(term, 2 * n + 2), -1, 2 * n + 3);
        if (term.order() > order)
            term = truncated(term, order);
    }
    return checked(acc, "nu");
}

std::array<TruncSeries, 3> mock_theta_triple(long order) {
    TruncSeries unitized = unitize(negate_variable(nu(2 * order)), 2);
    TruncSeries prod = multi_pochhammer({PochSpec::infinite(qpow(1), 1),
                                         PochSpec::infinite(neg_qpow(1), 1),
                                         PochSpec::infinite(neg_qpow(1), 1),
                                         PochSpec::infinite(neg_qpow(1), 1)},
                                        order);
    TruncSeries quot = div(poch2_inf(2, order), mul(poch2_inf(1, order), poch2_inf(1, order)));
    require_integral(unitized, "mock_theta unitized");
    require_integral(prod, "mock_theta product");
    require_integral(quot, "mock_theta quotient");
    return {std::move(unitized), std::move(prod), std::move(quot)};
}

} // namespace qseries
