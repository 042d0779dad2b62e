#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/qobjects.hpp"

namespace qseries {

/**
 * The five expansion routes for F_{k,1}(q), all with constant term 1:
 *
 *   Product: sum_{n>=0} (q^{2n+2}, q^{2n+2k}; q^2)_inf / (q^{2n+1}; q^2)_inf^2 q^{2n}
 *   BBK:     sum_{n>=0} (q^{2k-1}; q^2)_n q^n / (q; q^2)_{n+1}
 *   CW:      sum_{n=0}^{k-2} [k-2, n]_{q^2} (q^2; q^2)_n q^{2n^2+2n} / (q; q^2)_{n+1}^2   (k >= 2)
 *   Lambert: sum_{n>=0} q^n / (1 - q^{2n+1})                                              (k = 1)
 *   Phi:     (q^2;q^2)_inf^2 / ((q;q^2)_inf^2 (q^2;q^2)_{k-1}) * phi(q,q; q^{2k}; q^2, q^2)
 */
enum class FkForm { Product, BBK, CW, Lambert, Phi };

std::string_view to_string(FkForm form);
std::optional<FkForm> fk_form_from_string(std::string_view name);

/* A series split into summands whose sum must reproduce it exactly.
 * labels[i] is a human-readable closed form of summands[i]. */
struct Decomposition {
    TruncSeries target;
    std::vector<TruncSeries> summands;
    std::vector<std::string> labels;
};

/* F_{k,1}(q) truncated to `order`, by the requested route. Throws InvalidForm
 * when form and k are incompatible (CW needs k >= 2, Lambert k = 1, and k >= 1
 * always). Every coefficient is checked integral. */
TruncSeries f_k1(long k, FkForm form, long order);

/* (q^2;q^2)_n / (q;q^2)_n^2 for n >= 1, truncated to `order`. */
TruncSeries ratio(long n, long order);

/* (q^2;q^2)_n / (q;q^2)_{n+1}^2 for n >= 0; equals 1/(1-q)^2 at n = 0. */
TruncSeries ratio_corollary(long n, long order);

/* ratio(n) split as sum_{i=0}^{n} [n,i]_{q^2} q^i /
 * ((q^{2i+1};q^2)_{n-i} (q^{2(n-i)+1};q^2)_i); summand 0 is 1/(q;q^2)_n. */
Decomposition decompose_ratio(long n, long order);

/* F_{k,1} (computed via the BBK route as target) split into the k-1 CW
 * summands; summand 0 is 1/(1-q)^2. Requires k >= 2. */
Decomposition decompose_cw(long k, long order);

/* The "substitution of one": summand i is
 * (q;q^2)_i (q;q^2)_{m-i} q^i / ((q^2;q^2)_i (q^2;q^2)_{m-i}) and the target
 * is the constant series 1 — the decomposition invariant is the identity. */
Decomposition one_substitution(long m, long order);

/* Both sides of the second Chu–Vandermonde sum at (a,c,q) -> (q, q^{1-2m}, q^2):
 * left  = phi(q, q^{-2m}; q^{1-2m}; q^2, q^2)  (terminating, m+1 terms)
 * right = (q^2;q^2)_m / (q;q^2)_m */
std::pair<TruncSeries, TruncSeries> chu_vandermonde_instance(long m, long order);

/* Both sides of Heine's first transformation at (a,b,c,z,q) -> (q,q,q^{2k},q^2,q^2):
 * left  = phi(q, q; q^{2k}; q^2, q^2)
 * right = (q, q^3; q^2)_inf / (q^{2k}, q^2; q^2)_inf * phi(q^{2k-1}, q^2; q^3; q^2, q) */
std::pair<TruncSeries, TruncSeries> heine_instance(long k, long order);

/* Both sides of Fine's second transformation at (a,b,z,q) -> (q^{2k-3}, q, q, q^2):
 * left  = phi(q^2, q^{2k-1}; q^3; q^2, q)
 * right = 1/(1-q) sum_{n=0}^{k-2} (q^{4-2k};q^2)_n (-q^{2k-2})^n q^{n^2+n} / (q^3;q^2)_n^2 */
std::pair<TruncSeries, TruncSeries> fine_instance(long k, long order);

/* Both sides of the Pochhammer reversal
 * (q;q^2)_{m-i}/(q^2;q^2)_{m-i} =
 *     (q;q^2)_m/(q^2;q^2)_m * (q^{-2m};q^2)_i/(q^{1-2m};q^2)_i * q^i. */
std::pair<TruncSeries, TruncSeries> pochhammer_reversal(long m, long i, long order);

/* Both sides of
 * (q^{4-2k};q^2)_n = (-1)^n q^{(4-2k)n+n^2-n} (q^2;q^2)_n [k-2, n]_{q^2},
 * for 0 <= n <= k-2; both are Laurent polynomials of degree 0. */
std::pair<TruncSeries, TruncSeries> binomial_rewrite(long k, long n, long order);

/* The third-order mock theta function nu(q) = sum q^{n(n+1)} / (q;q^2)_{n+1}. */
TruncSeries nu(long order);

/* The three series of U_2(nu(-q)) = (q;q)_inf (-q;q)_inf^3 = (q^2;q^2)_inf / (q;q^2)_inf^2,
 * in that order, each truncated to `order`. */
std::array<TruncSeries, 3> mock_theta_triple(long order);

} // namespace qseries
