#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qseries/aeb.hpp"
#include "qseries/series.hpp"

namespace qseries {

using json = nlohmann::ordered_json;

enum class VerifyStatus { Pass, FirstMismatch, NegativeCoefficient, ZeroCoefficient };

std::string_view to_string(VerifyStatus status);

/**
 * Outcome of one identity or positivity check. When the status is not Pass,
 * witness_exponent is the smallest exponent exhibiting the failure, and the
 * offending value(s) are rendered as exact decimal strings: for an equality
 * check lhs_value/rhs_value hold both sides, for a positivity check
 * lhs_value holds the offending coefficient.
 */
struct VerifyReport {
    std::string check_id;
    std::map<std::string, long> params;
    long order = 0;
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<long> witness_exponent;
    std::optional<std::string> lhs_value;
    std::optional<std::string> rhs_value;

    bool passed() const { return status == VerifyStatus::Pass; }

    json to_json() const;
    std::string to_line() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

/* Pass iff all coefficients at exponents <= order agree exactly (unstored low
 * exponents count as zero). Throws InsufficientPrecision when either operand
 * carries order < `order`. */
VerifyReport assert_equal(const TruncSeries& lhs, const TruncSeries& rhs, long order,
                          std::string check_id = "equal",
                          std::map<std::string, long> params = {});

/* Pass iff every coefficient at exponents in [from, to] is > 0 (strict) or
 * >= 0. Throws InsufficientPrecision when to > s.order, and NotAPowerSeries
 * when s has a nonzero coefficient at a negative exponent. */
VerifyReport assert_positive(const TruncSeries& s, long from, long to, bool strict,
                             std::string check_id = "positive",
                             std::map<std::string, long> params = {});

/* Pass iff the summands sum exactly to the target at all exponents <= order
 * and, when require_nonneg is set, every summand is coefficient-wise
 * nonnegative up to `order`. On a sum mismatch lhs_value is the re-summed
 * coefficient and rhs_value the target's; a negative summand is identified
 * by the "summand" entry added to params. */
VerifyReport check_decomposition(const Decomposition& d, long order, bool require_nonneg,
                                 std::string check_id = "decomposition",
                                 std::map<std::string, long> params = {});

/**
 * Self-contained proof data for a checked decomposition: coefficient tables
 * for exponents 0..order, every entry an exact decimal string. Re-summing
 * summands[*][e] must give target[e], and every summand entry is >= 0; an
 * arithmetic-only checker with no series code can validate both claims.
 *
 * Serialized as {statement, order, target: [string], summands: [[string]]}.
 */
struct Certificate {
    json statement;
    long order = 0;
    std::vector<std::string> target;
    std::vector<std::vector<std::string>> summands;

    json to_json() const;
    static Certificate from_json(const json& j);
};

/* Builds the certificate after re-running check_decomposition with the
 * nonnegativity requirement; throws UncertifiableDecomposition when the
 * decomposition does not check out or reaches below exponent 0. */
Certificate emit_certificate(const Decomposition& d, long order,
                             json statement = json::object());

/* The independent re-checker: parses the coefficient tables, re-sums them
 * with plain big-number arithmetic, and re-checks nonnegativity. No series
 * machinery is involved. */
bool recheck_certificate(const json& cert);

} // namespace qseries
