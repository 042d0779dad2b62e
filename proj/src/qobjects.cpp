#include "qseries/qobjects.hpp"

#include <algorithm>
#include <string>

namespace qseries {

namespace {

/* Valuation of (1 - sign q^g): g when g < 0, else 0. Callers rule out the
 * vanishing factor (sign = +1, g = 0) beforehand. */
long factor_valuation(long g) { return std::min<long>(0, g); }

/* Valuation of (arg; q^b)_n under the same no-vanishing assumption. */
long poch_valuation(const Monomial& arg, long base, long n) {
    long v = 0;
    for (long k = 0; k < n; ++k)
        v += factor_valuation(arg.exponent + base * k);
    return v;
}

void validate_base(long base, const char* who) {
    if (base < 1)
        throw SeriesError(std::string(who) + ": base must be >= 1");
}

} // namespace

TruncSeries pochhammer(const PochSpec& spec, long order) {
    validate_base(spec.base, "pochhammer");
    const long e = spec.arg.exponent;
    const int sigma = spec.arg.sign;

    if (!spec.length) {
        if (e <= 0)
            throw DivergentProduct("pochhammer: infinite product needs arg exponent >= 1, got " +
                                   std::to_string(e));
        TruncSeries s = TruncSeries::constant(1, order);
        for (long k = 0; e + spec.base * k <= order; ++k)
            s = mul_binomial(s, -sigma, e + spec.base * k);
        return s;
    }

    long n = *spec.length;
    if (n < 0)
        throw SeriesError("pochhammer: negative length");

    // Negative-exponent factors eat into the order; pad upfront so the final
    // window still reaches `order` exactly.
    long pad = 0;
    for (long k = 0; k < n; ++k)
        pad += std::max<long>(0, -(e + spec.base * k));

    TruncSeries s = TruncSeries::constant(1, order + pad);
    for (long k = 0; k < n; ++k) {
        long g = e + spec.base * k;
        // A positive-exponent factor whose shift clears the window is 1 there.
        if (g > 0 && s.valuation() + g > order)
            break;
        s = mul_binomial(s, -sigma, g);
    }
    if (s.order() > order)
        s = truncated(s, order);
    return s;
}

TruncSeries multi_pochhammer(const std::vector<PochSpec>& specs, long order) {
    // Laurent factors lower the product's valuation; each factor must be
    // carried to a correspondingly higher order so the product's tight
    // mul() bound still lands on `order`.
    long total_val = 0;
    std::vector<long> vals(specs.size(), 0);
    for (size_t i = 0; i < specs.size(); ++i) {
        if (specs[i].length)
            vals[i] = poch_valuation(specs[i].arg, specs[i].base, *specs[i].length);
        total_val += vals[i];
    }

    TruncSeries prod = TruncSeries::constant(1, order - total_val);
    for (size_t i = 0; i < specs.size(); ++i)
        prod = mul(prod, pochhammer(specs[i], order - (total_val - vals[i])));
    if (prod.order() > order)
        prod = truncated(prod, order);
    return prod;
}

TruncSeries q_binomial(long M, long N, long base, long order) {
    validate_base(base, "q_binomial");
    if (N < 0 || N > M)
        return TruncSeries::zero(order); // the definition's "0, otherwise" branch

    const long degree = base * N * (M - N);
    const long w = std::min(order, degree);
    TruncSeries num = pochhammer(PochSpec::finite(qpow(base), base, M), w);
    TruncSeries den = mul(pochhammer(PochSpec::finite(qpow(base), base, N), w),
                          pochhammer(PochSpec::finite(qpow(base), base, M - N), w));
    TruncSeries r = div(num, den);
    if (!r.is_integral())
        throw IntegralityError("q_binomial(" + std::to_string(M) + "," + std::to_string(N) +
                               "): fractional coefficient");
    // A polynomial of degree `degree`: zero beyond it, so the window may be
    // extended for free.
    return order > w ? extended(r, order) : r;
}

TruncSeries phi(const PhiSpec& spec, long order) {
    validate_base(spec.base, "phi");
    if (order < 0)
        throw SeriesError("phi: order must be >= 0");
    const long b = spec.base;
    const long p = static_cast<long>(spec.lower.size()) -
                   static_cast<long>(spec.upper.size()) + 1; // s - r + 1
    const Monomial z = spec.argument;

    // Termination index: smallest m with some upper parameter equal to q^{-b m}.
    std::optional<long> terminating;
    for (const Monomial& a : spec.upper)
        if (a.sign == 1 && a.exponent <= 0 && a.exponent % b == 0) {
            long m = -a.exponent / b;
            if (!terminating || m < *terminating)
                terminating = m;
        }

    // Number of terms to sum: indices 0..n_cap.
    long n_cap;
    if (terminating) {
        n_cap = *terminating;
        if (spec.term_bound)
            n_cap = std::min(n_cap, *spec.term_bound - 1);
    } else if (spec.term_bound) {
        n_cap = *spec.term_bound - 1;
    } else {
        if (p < 0 || (p == 0 && z.exponent < 1))
            throw NonConvergentTruncation(
                "phi: term valuations do not grow and no term bound was given");
        // Past n_safe every parameter exponent + b*n is positive and the
        // term valuation v(n) increases by z.exponent + p*b*n per step.
        long n_safe = 0;
        for (const Monomial& m : spec.upper)
            n_safe = std::max(n_safe, -m.exponent / b + 1);
        for (const Monomial& m : spec.lower)
            n_safe = std::max(n_safe, -m.exponent / b + 1);
        long v = 0, n = 0;
        while (n < n_safe || v <= order) {
            long dv = z.exponent + p * b * n;
            for (const Monomial& m : spec.upper)
                dv += factor_valuation(m.exponent + b * n);
            for (const Monomial& m : spec.lower)
                dv -= factor_valuation(m.exponent + b * n);
            v += dv;
            ++n;
        }
        n_cap = n - 1;
    }
    if (n_cap < 0)
        return TruncSeries::zero(order);

    // Order padding: multiplications by negative-exponent exact factors and
    // monomials shrink the reachable order; divisions only raise it.
    long pad = 0;
    for (long n = 0; n < n_cap; ++n) {
        for (const Monomial& a : spec.upper)
            pad += std::max<long>(0, -(a.exponent + b * n));
        pad += std::max<long>(0, -z.exponent);
        pad += std::max<long>(0, -p * b * n);
    }

    TruncSeries result = TruncSeries::zero(order);
    TruncSeries term = TruncSeries::constant(1, order + pad);
    for (long n = 0;; ++n) {
        add_in_place(result, term);
        if (n == n_cap)
            break;

        // term_{n+1} = term_n * prod_i (1 - A_i Q^n) * z * ((-1) Q^n)^p
        //            / ((1 - Q^{n+1}) prod_j (1 - B_j Q^n))
        bool vanished = false;
        for (const Monomial& a : spec.upper) {
            long g = a.exponent + b * n;
            if (a.sign == 1 && g == 0) {
                vanished = true; // (A;Q)_{n'} carries this zero factor for all n' > n
                break;
            }
        }
        if (vanished)
            break;

        for (const Monomial& a : spec.upper)
            term = mul_binomial(term, -a.sign, a.exponent + b * n);
        term = shifted(term, z.exponent);
        if (z.sign == -1)
            term = scaled(term, Coefficient(-1));
        if (p != 0) {
            term = shifted(term, p * b * n);
            if (p % 2 != 0)
                term = scaled(term, Coefficient(-1));
        }
        term = div_binomial(term, -1, b * (n + 1));
        for (const Monomial& bl : spec.lower) {
            long g = bl.exponent + b * n;
            if (bl.sign == 1 && g == 0)
                throw SingularParameter("phi: lower parameter q^" +
                                        std::to_string(bl.exponent) +
                                        " vanishes at term " + std::to_string(n + 1));
            term = div_binomial(term, -bl.sign, g);
        }
    }
    return result;
}

} // namespace qseries
