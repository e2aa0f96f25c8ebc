#pragma once

#include "gwkit/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwkit {

struct SeriesKey {
    int u = 0;
    std::vector<int> s;
    auto operator<=>(const SeriesKey&) const = default;
};

// Laurent series in u tensored with a total-degree-truncated series in
// auxiliary variables s_1..s_ns. Window semantics:
//   u_lo   proven bound: coefficients of u^k with k < u_lo are exactly zero
//   u_hi   exclusive truncation: u^k with k >= u_hi is unknown (EXACT = none)
//   s_cap  inclusive total-degree cap on s-monomials (EXACT = none)
// Stored keys always lie inside the window; absent keys inside it are zero.
// Arithmetic propagates the tightest window supported by both operands.
class Series {
public:
    static constexpr int EXACT = 1 << 28;

    int ns = 0;
    int u_lo = EXACT;
    int u_hi = EXACT;
    int s_cap = EXACT;
    std::map<SeriesKey, Scalar> coef;
    std::string s_name = "s";

    static Series zero(int ns);
    static Series constant(Scalar c, int ns);
    static Series monomial(int ns, int u, std::vector<int> s, Scalar c);

    bool in_window(const SeriesKey& k) const;
    bool is_zero() const { return coef.empty(); }
    void set(const SeriesKey& k, Scalar c);
    void add_at(const SeriesKey& k, const Scalar& c);
    Scalar at(int u, const std::vector<int>& s = {}) const;

    // Raise u_lo to the stored support minimum (sound: absent-in-window means zero).
    void tighten();

    // Narrow the window (never widens) and drop coefficients outside it.
    Series truncated(int new_u_lo, int new_u_hi, int new_s_cap) const;
    Series with_u_hi(int new_u_hi) const;
    Series with_s_cap(int new_s_cap) const;

    // u-series (ns = 0) of the coefficient of the given s-monomial.
    Series s_slice(const std::vector<int>& s) const;
    // All s-monomials with a stored coefficient, in canonical order.
    std::vector<std::vector<int>> s_support() const;

    Series operator-() const;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series operator*(const Series& a, const Scalar& c);

Series inverse_series(const Series& g);
Series pow(const Series& base, long e);

Series differentiate_u(const Series& a);
Series s_log_derivative(const Series& a, int k);
// Multiply by u^p.
Series u_shift(const Series& a, int p);
// Substitute u -> d*u.
Series u_rescale(const Series& a, int d);
// Substitute u -> i*u (coefficient of u^k picks up i^k).
Series i_twist(const Series& a);

// True iff the two series agree on the intersection of their windows.
bool equal_on_common_window(const Series& a, const Series& b);

// S(k*u) = sin(ku/2)/(ku/2) to the given exclusive u-order; sinh convention
// is the u -> iu transform and has all-positive coefficients.
enum class SConvention { sin, sinh };
Series s_function(int arg_multiplier, SConvention conv, int u_order);

// exp(c*u) to the given exclusive u-order.
Series exp_series(const GaussRat& c, int u_order);

} // namespace gwkit
