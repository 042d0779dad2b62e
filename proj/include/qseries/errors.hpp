#pragma once

#include <stdexcept>

namespace qseries {

/* Base class for every error the engine raises on purpose. */
struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Division by a series that is zero throughout its stored window. */
struct DegenerateDivisor : SeriesError {
    using SeriesError::SeriesError;
};

/* A coefficient above the truncation order was requested. */
struct BeyondTruncation : SeriesError {
    using SeriesError::SeriesError;
};

/* A power-series-only operation was applied to a proper Laurent series. */
struct NotAPowerSeries : SeriesError {
    using SeriesError::SeriesError;
};

/* Infinite q-Pochhammer product whose factors never become 1 + O(q^{N+1}). */
struct DivergentProduct : SeriesError {
    using SeriesError::SeriesError;
};

/* A lower phi parameter makes a denominator Pochhammer vanish in range. */
struct SingularParameter : SeriesError {
    using SeriesError::SeriesError;
};

/* A phi series whose term valuations do not grow, with no term bound given. */
struct NonConvergentTruncation : SeriesError {
    using SeriesError::SeriesError;
};

/* Series form and parameter k are incompatible (CW needs k >= 2, Lambert k = 1). */
struct InvalidForm : SeriesError {
    using SeriesError::SeriesError;
};

/* A verification was requested beyond the order the operands carry. */
struct InsufficientPrecision : SeriesError {
    using SeriesError::SeriesError;
};

/* Refusal to emit a certificate for a decomposition that does not check out. */
struct UncertifiableDecomposition : SeriesError {
    using SeriesError::SeriesError;
};

/* A value contractually required to be an integer came out fractional. */
struct IntegralityError : SeriesError {
    using SeriesError::SeriesError;
};

} // namespace qseries
