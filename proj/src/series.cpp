#include "gwkit/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gwkit {

namespace {

int sat_add(int a, int b) {
    if (a >= Series::EXACT || b >= Series::EXACT) return Series::EXACT;
    return a + b;
}

int sat_sub(int a, int b) {
    if (a >= Series::EXACT) return Series::EXACT;
    return a - b;
}

int total_degree(const std::vector<int>& s) {
    return std::accumulate(s.begin(), s.end(), 0);
}

void check_same_ns(const Series& a, const Series& b) {
    if (a.ns != b.ns) throw std::invalid_argument("Series: mismatched variable count");
}

} // namespace

Series Series::zero(int ns) {
    Series r;
    r.ns = ns;
    return r;
}

Series Series::constant(Scalar c, int ns) {
    Series r;
    r.ns = ns;
    r.u_lo = 0;
    if (!c.is_zero()) r.coef[{0, std::vector<int>(ns, 0)}] = std::move(c);
    return r;
}

Series Series::monomial(int ns, int u, std::vector<int> s, Scalar c) {
    Series r;
    r.ns = ns;
    r.u_lo = u;
    if (!c.is_zero()) r.coef[{u, std::move(s)}] = std::move(c);
    return r;
}

bool Series::in_window(const SeriesKey& k) const {
    return k.u >= u_lo && k.u < u_hi && total_degree(k.s) <= s_cap;
}

void Series::set(const SeriesKey& k, Scalar c) {
    if (static_cast<int>(k.s.size()) != ns) throw std::invalid_argument("Series::set: bad key");
    if (!in_window(k)) throw std::out_of_range("Series::set: key outside window");
    if (c.is_zero())
        coef.erase(k);
    else
        coef[k] = std::move(c);
}

void Series::add_at(const SeriesKey& k, const Scalar& c) {
    if (c.is_zero() || !in_window(k)) return;
    auto it = coef.find(k);
    if (it == coef.end()) {
        coef[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

Scalar Series::at(int u, const std::vector<int>& s) const {
    SeriesKey k{u, s};
    if (k.s.empty() && ns > 0) k.s.assign(ns, 0);
    if (!in_window(k)) throw std::out_of_range("Series::at: outside window");
    auto it = coef.find(k);
    return it == coef.end() ? Scalar() : it->second;
}

void Series::tighten() {
    if (!coef.empty()) u_lo = std::max(u_lo, coef.begin()->first.u);
}

Series Series::truncated(int new_u_lo, int new_u_hi, int new_s_cap) const {
    Series r = zero(ns);
    r.s_name = s_name;
    r.u_lo = std::max(u_lo, new_u_lo);
    r.u_hi = std::min(u_hi, new_u_hi);
    r.s_cap = std::min(s_cap, new_s_cap);
    for (const auto& [k, c] : coef)
        if (r.in_window(k)) r.coef[k] = c;
    return r;
}

Series Series::with_u_hi(int new_u_hi) const { return truncated(u_lo, new_u_hi, s_cap); }

Series Series::with_s_cap(int new_s_cap) const { return truncated(u_lo, u_hi, new_s_cap); }

Series Series::s_slice(const std::vector<int>& s) const {
    if (static_cast<int>(s.size()) != ns) throw std::invalid_argument("Series::s_slice: bad monomial");
    Series r = zero(0);
    r.u_lo = u_lo;
    r.u_hi = u_hi;
    for (const auto& [k, c] : coef)
        if (k.s == s) r.coef[{k.u, {}}] = c;
    return r;
}

std::vector<std::vector<int>> Series::s_support() const {
    std::vector<std::vector<int>> out;
    for (const auto& [k, c] : coef)
        if (out.empty() || out.back() != k.s) {
            if (std::find(out.begin(), out.end(), k.s) == out.end()) out.push_back(k.s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& [k, c] : r.coef) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    check_same_ns(a, b);
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    r.u_lo = std::min(a.u_lo, b.u_lo);
    r.u_hi = std::min(a.u_hi, b.u_hi);
    r.s_cap = std::min(a.s_cap, b.s_cap);
    if (r.u_hi <= r.u_lo && !(a.is_zero() && b.is_zero()))
        throw std::domain_error("Series: empty window in addition");
    for (const auto& [k, c] : a.coef) r.add_at(k, c);
    for (const auto& [k, c] : b.coef) r.add_at(k, c);
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    check_same_ns(a, b);
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    if (a.is_zero() || b.is_zero()) {
        // The zero series is exact; keep the product window anyway.
        r.u_lo = sat_add(a.u_lo, b.u_lo);
        r.u_hi = std::min(sat_add(a.u_hi, b.u_lo), sat_add(b.u_hi, a.u_lo));
        r.s_cap = std::min(a.s_cap, b.s_cap);
        return r;
    }
    r.u_lo = sat_add(a.u_lo, b.u_lo);
    r.u_hi = std::min(sat_add(a.u_hi, b.u_lo), sat_add(b.u_hi, a.u_lo));
    r.s_cap = std::min(a.s_cap, b.s_cap);
    if (r.u_hi <= r.u_lo) throw std::domain_error("Series: empty window in multiplication");
    SeriesKey k;
    k.s.resize(a.ns);
    const int b_min_u = b.coef.begin()->first.u;
    for (const auto& [ka, ca] : a.coef) {
        if (ka.u + b_min_u >= r.u_hi) break;
        for (const auto& [kb, cb] : b.coef) {
            k.u = ka.u + kb.u;
            if (k.u >= r.u_hi) break;  // keys ascend in u
            int sdeg = 0;
            for (int i = 0; i < a.ns; ++i) {
                k.s[i] = ka.s[i] + kb.s[i];
                sdeg += k.s[i];
            }
            if (sdeg > r.s_cap) continue;
            r.add_at(k, ca * cb);
        }
    }
    return r;
}

Series operator*(const Series& a, const Scalar& c) {
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    r.u_lo = a.u_lo;
    r.u_hi = a.u_hi;
    r.s_cap = a.s_cap;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.coef) {
        Scalar p = v * c;
        if (!p.is_zero()) r.coef[k] = std::move(p);
    }
    return r;
}

Series inverse_series(const Series& g) {
    if (g.is_zero()) throw std::domain_error("Series: inverse of zero series");
    int l = g.coef.begin()->first.u;
    std::vector<int> s0(g.ns, 0);
    Scalar c = g.at(l, s0);
    if (c.is_zero())
        throw std::domain_error("Series: inverse requires invertible leading coefficient");

    // gn = g / (c * u^l) has constant term 1; w = gn - 1 has positive weight.
    Series gn = u_shift(g, -l) * inverse(c);
    gn.tighten();
    int height = gn.u_hi >= Series::EXACT ? Series::EXACT : gn.u_hi;
    Series w = gn - Series::constant(Scalar(1L), g.ns);
    w.tighten();

    bool w_has_u = false, w_has_s = false;
    for (const auto& [k, v] : w.coef) {
        if (k.u > 0) w_has_u = true;
        if (total_degree(k.s) > 0) w_has_s = true;
    }
    if (height >= Series::EXACT && w_has_u)
        throw std::domain_error("Series: inverse of an exact u-polynomial needs a truncation window");
    if (w.s_cap >= Series::EXACT && w_has_s)
        throw std::domain_error("Series: inverse of an exact s-polynomial needs a degree cap");

    long bound = 1;
    if (w_has_u) bound += height;
    if (w_has_s) bound += w.s_cap;
    // Newton doubling: x <- x(2 - gn x) doubles the combined (u-power plus
    // s-degree) valuation of 1 - gn x each step, so log2(bound) full-window
    // products suffice where term-by-term geometric summation needs bound.
    Series acc = Series::constant(Scalar(1L), g.ns).truncated(0, height, w.s_cap);
    acc.s_name = g.s_name;
    const Series two = Series::constant(Scalar(2L), g.ns).truncated(0, height, w.s_cap);
    for (long reached = 1; reached < bound; reached *= 2) {
        Series residual = two - gn * acc;
        // gn*acc == 1 exactly: the residual is the constant 1 and acc is done.
        if (residual.coef.size() == 1 && residual.coef.begin()->first.u == 0 &&
            total_degree(residual.coef.begin()->first.s) == 0 &&
            residual.coef.begin()->second == Scalar(1L))
            break;
        acc = acc * residual;
    }
    return u_shift(acc, -l) * inverse(c);
}

Series operator/(const Series& a, const Series& b) {
    check_same_ns(a, b);
    return a * inverse_series(b);
}

Series pow(const Series& base, long e) {
    if (e < 0) return pow(inverse_series(base), -e);
    Series acc = Series::constant(Scalar(1L), base.ns);
    acc.s_name = base.s_name;
    if (e == 0) return acc;
    Series b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * b;
        b = (n >>= 1) ? b * b : b;
    }
    return acc;
}

Series differentiate_u(const Series& a) {
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    r.u_lo = sat_sub(a.u_lo, 1);
    r.u_hi = sat_sub(a.u_hi, 1);
    r.s_cap = a.s_cap;
    for (const auto& [k, c] : a.coef) {
        if (k.u == 0) continue;
        r.coef[{k.u - 1, k.s}] = c * Scalar(static_cast<long>(k.u));
    }
    return r;
}

Series s_log_derivative(const Series& a, int k) {
    if (k < 1 || k > a.ns) throw std::invalid_argument("s_log_derivative: bad variable index");
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    r.u_lo = a.u_lo;
    r.u_hi = a.u_hi;
    r.s_cap = a.s_cap;
    for (const auto& [key, c] : a.coef) {
        int e = key.s[k - 1];
        if (e != 0) r.coef[key] = c * Scalar(static_cast<long>(e));
    }
    return r;
}

Series u_shift(const Series& a, int p) {
    Series r = Series::zero(a.ns);
    r.s_name = a.s_name;
    r.u_lo = sat_add(a.u_lo, p);
    r.u_hi = sat_add(a.u_hi, p);
    r.s_cap = a.s_cap;
    for (const auto& [k, c] : a.coef) r.coef[{k.u + p, k.s}] = c;
    return r;
}

Series u_rescale(const Series& a, int d) {
    if (d < 1) throw std::invalid_argument("u_rescale: multiplier must be >= 1");
    Series r = a;
    for (auto& [k, c] : r.coef) c *= Scalar(pow_rat(mpq_class(d), k.u));
    return r;
}

Series i_twist(const Series& a) {
    Series r = a;
    for (auto& [k, c] : r.coef) c *= Scalar(i_power(k.u));
    return r;
}

bool equal_on_common_window(const Series& a, const Series& b) {
    if (a.ns != b.ns) return false;
    int lo = std::max(a.u_lo, b.u_lo);
    int hi = std::min(a.u_hi, b.u_hi);
    int cap = std::min(a.s_cap, b.s_cap);
    auto check = [&](const Series& x, const Series& y) {
        for (const auto& [k, c] : x.coef) {
            if (k.u < lo || k.u >= hi || total_degree(k.s) > cap) continue;
            auto it = y.coef.find(k);
            Scalar other = it == y.coef.end() ? Scalar() : it->second;
            if (!(c == other)) return false;
        }
        return true;
    };
    return check(a, b) && check(b, a);
}

Series s_function(int arg_multiplier, SConvention conv, int u_order) {
    if (u_order < 0) throw std::invalid_argument("s_function: negative order");
    Series r = Series::zero(0);
    r.u_lo = 0;
    r.u_hi = u_order;
    mpq_class half_k(arg_multiplier, 2);
    half_k.canonicalize();
    for (int j = 0; 2 * j < u_order; ++j) {
        mpq_class c = pow_rat(half_k, 2 * j) / mpq_class(factorial(2 * j + 1));
        if (conv == SConvention::sin && (j % 2)) c = -c;
        if (c != 0) r.coef[{2 * j, {}}] = Scalar(c);
    }
    return r;
}

Series exp_series(const GaussRat& c, int u_order) {
    Series r = Series::zero(0);
    r.u_lo = 0;
    r.u_hi = u_order;
    GaussRat p(1L);
    for (int k = 0; k < u_order; ++k) {
        Scalar v(p * GaussRat(mpq_class(1) / mpq_class(factorial(k))));
        if (!v.is_zero()) r.coef[{k, {}}] = std::move(v);
        p *= c;
    }
    return r;
}

} // namespace gwkit
