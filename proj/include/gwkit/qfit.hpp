#pragma once

#include "gwkit/series.hpp"

#include <optional>
#include <vector>

namespace gwkit {

// Result of fitting a u-series as P(q)/Q(q) under q = -exp(iu).
// Coefficient vectors are indexed by q-power, trimmed, gcd-reduced, and
// scaled so the lowest nonzero denominator coefficient is 1.
struct RationalFitResult {
    std::vector<Scalar> numerator;
    std::vector<Scalar> denominator;
    long matched_coefficient_count = 0;
    bool residual_flag = false;
};

// Fits the u-only series f by exact linear algebra. The linear system uses
// 2*max_degree+1 coefficient rows to solve and checks every remaining row;
// residual_flag is true iff some spare row mismatches. Throws if the window
// cannot overdetermine the system.
RationalFitResult fit_rational_in_q(const Series& f, int max_degree);

// Memo for repeated fits of one fixed series at growing degree budgets: the
// q-power columns and their products with the series only ever gain entries.
// Valid for one series and one window; reuse across budgets only.
struct QFitCache {
    bool primed = false;
    bool constant_coeffs = false;
    Scalar content = Scalar(1L);
    Series reduced = Series::zero(0);
    std::vector<Series> q_powers;
    std::vector<Series> products;
};

RationalFitResult fit_rational_in_q(const Series& f, int max_degree, QFitCache& cache);

// (-exp(iu))^j as a u-series on [0, u_order).
Series q_power_series(int j, int u_order);

// Re-expand a fit as a u-series on [u_lo, u_hi).
Series expand_fit(const RationalFitResult& fit, int u_lo, int u_hi);

// Canonical vector in the null space of M (rows x cols), or nullopt if the
// null space is trivial. Deterministic: first free column set to 1.
std::optional<std::vector<Scalar>> nullspace_vector(std::vector<std::vector<Scalar>> m, int cols);

// Exact inverse via Gauss-Jordan; throws std::domain_error if singular.
std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> m);

} // namespace gwkit
