#pragma once

#include <optional>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/* q^e as a Monomial. */
inline Monomial qpow(long e) { return Monomial(1, e); }

/* -q^e as a Monomial. */
inline Monomial neg_qpow(long e) { return Monomial(-1, e); }

/**
 * A q-Pochhammer product (A; q^base)_length with A = arg.sign * q^arg.exponent,
 * i.e. prod_{k=0}^{length-1} (1 - A q^{base k}). length = nullopt means the
 * infinite product, which has a well-defined truncated expansion only when
 * arg.exponent >= 1: every late enough factor is then 1 + O(q^{N+1}).
 */
struct PochSpec {
    Monomial arg;
    long base = 1;
    std::optional<long> length; // nullopt = infinite

    static PochSpec finite(Monomial arg, long base, long n) { return {arg, base, n}; }
    static PochSpec infinite(Monomial arg, long base) { return {arg, base, std::nullopt}; }
};

/* (A; q^b)_n truncated to `order`. For n = infinity multiplies every factor
 * with arg.exponent + base*k <= order; the first omitted factor is
 * 1 + O(q^{order+1}), so all reported coefficients are exact.
 * Throws DivergentProduct for an infinite product with arg.exponent <= 0. */
TruncSeries pochhammer(const PochSpec& spec, long order);

/* (A_1; q^{b_1})_{n_1} (A_2; q^{b_2})_{n_2} ... truncated to `order`.
 * Empty list gives the constant 1. */
TruncSeries multi_pochhammer(const std::vector<PochSpec>& specs, long order);

/* Gaussian binomial [M over N]_{q^base}: the polynomial
 * (Q;Q)_M / ((Q;Q)_N (Q;Q)_{M-N}) with Q = q^base for 0 <= N <= M, and the
 * zero series otherwise. Computed by series division; coefficients are
 * checked integral (IntegralityError on violation, which would be a bug). */
TruncSeries q_binomial(long M, long N, long base, long order);

/**
 * A basic hypergeometric series
 *
 *   phi(A_1..A_r; B_1..B_s; Q, z)
 *     = sum_{n>=0} (A_1,..,A_r; Q)_n ((-1)^n Q^C(n,2))^{s-r+1} z^n
 *                  / (Q, B_1,..,B_s; Q)_n
 *
 * with Q = q^base and every parameter a signed power of q. The
 * (-1)^n Q^C(n,2) factor is applied with exponent s-r+1 verbatim, including
 * when that exponent is zero or negative.
 */
struct PhiSpec {
    std::vector<Monomial> upper;
    std::vector<Monomial> lower;
    long base = 1;
    Monomial argument; // z
    std::optional<long> term_bound; // cap on the number of terms summed
};

/* The exact partial sum of all terms contributing to exponents <= order.
 * The sum is cut off when an upper parameter q^{-base*m} terminates it, when
 * term_bound is reached, or when term valuations have grown past `order`.
 * Throws SingularParameter when a lower-parameter Pochhammer vanishes within
 * the evaluated range, and NonConvergentTruncation when term valuations do
 * not grow and no term_bound was supplied. */
TruncSeries phi(const PhiSpec& spec, long order);

} // namespace qseries
