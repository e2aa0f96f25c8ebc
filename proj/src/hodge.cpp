#include "gwkit/hodge.hpp"

#include "gwkit/partition.hpp"

#include <stdexcept>
#include <string>

namespace gwkit {

namespace {

Series unit_u_series(int u_order) {
    return Series::constant(Scalar(1), 0).with_u_hi(u_order);
}

// Coefficients e_0..e_cap of prod_i (1 + a_i t).
std::vector<mpq_class> elementary_coeffs(const std::vector<mpq_class>& args, long cap) {
    std::vector<mpq_class> e(static_cast<size_t>(cap) + 1, mpq_class(0));
    e[0] = 1;
    for (const mpq_class& a : args)
        for (long j = cap; j >= 1; --j) e[j] += a * e[j - 1];
    return e;
}

// Coefficients h_0..h_cap of prod_i 1/(1 - a_i t).
std::vector<mpq_class> complete_coeffs(const std::vector<mpq_class>& args, long cap) {
    std::vector<mpq_class> h(static_cast<size_t>(cap) + 1, mpq_class(0));
    h[0] = 1;
    for (const mpq_class& a : args)
        for (long j = 1; j <= cap; ++j) h[j] += a * h[j - 1];
    return h;
}

std::vector<mpq_class> reciprocal_args(long n) {
    std::vector<mpq_class> args;
    args.reserve(static_cast<size_t>(n));
    for (long i = 1; i <= n; ++i) args.push_back(rat(1, i));
    return args;
}

// Constant 1 as a z-polynomial in one variable with total degree cap.
Series z_unit(int z_order) {
    Series f = Series::zero(1);
    f.u_lo = 0;
    f.u_hi = Series::EXACT;
    f.s_cap = z_order;
    f.s_name = "z";
    f.set(SeriesKey{0, {0}}, Scalar(1));
    return f;
}

// (1 + z/i)^{-1} truncated at total z-degree z_order.
Series geometric_factor(long i, int z_order) {
    Series f = Series::zero(1);
    f.u_lo = 0;
    f.u_hi = Series::EXACT;
    f.s_cap = z_order;
    f.s_name = "z";
    mpq_class step = rat(-1, i);
    mpq_class c(1);
    for (int j = 0; j <= z_order; ++j) {
        f.set(SeriesKey{0, {j}}, Scalar(c));
        c *= step;
    }
    return f;
}

// Scatter a pure u-series into an ns=1 slot series at z-degree zd.
void add_u_slice(Series& slot, const Series& part, int zd) {
    if (zd > slot.s_cap) return;
    for (const auto& [key, c] : part.coef) slot.add_at(SeriesKey{key.u, {zd}}, c);
}

// Single bracket factor (1/iu)[G(w+, z) - G(w-, z)] at curve degree d, with
// w+- = +-i d z u / (1 - e^{-+idu}), expanded in z_order powers of z.
Series bracket_slot(long d, int u_order, int z_order) {
    const int inner = u_order + 2;
    Series one = unit_u_series(inner);
    Series x = Series::monomial(0, 1, {}, Scalar(GaussRat(mpq_class(0), rat(d)))).with_u_hi(inner);
    Series c_plus = x / (one - exp_series(GaussRat(mpq_class(0), rat(-d)), inner));
    Series c_minus = (-x) / (one - exp_series(GaussRat(mpq_class(0), rat(d)), inner));

    Series slot = Series::zero(1);
    slot.u_lo = 0;
    slot.u_hi = u_order;
    slot.s_cap = z_order;
    slot.s_name = "z";

    Series cp_pow = unit_u_series(inner);
    Series cm_pow = unit_u_series(inner);
    Series inv_prod = z_unit(z_order);
    for (int m = 1; m <= z_order + 1; ++m) {
        cp_pow = cp_pow * c_plus;
        cm_pow = cm_pow * c_minus;
        inv_prod = inv_prod * geometric_factor(m, z_order);
        Series diff = cp_pow - cm_pow;
        diff.tighten();
        Series odd = u_shift(diff, -1) * Scalar(GaussRat(mpq_class(0), rat(-1)));
        Scalar fm = Scalar(rat(mpz_class(1), factorial(m)));
        for (const auto& [uk, uc] : odd.coef) {
            if (uk.u >= u_order) continue;
            for (const auto& [zk, zc] : inv_prod.coef) {
                int zd = (m - 1) + zk.s[0];
                if (zd > z_order) continue;
                slot.add_at(SeriesKey{uk.u, {zd}}, uc * zc * fm);
            }
        }
    }
    return slot;
}

// Same factor at d = 1 assembled from the inversion form
// (1/z) sum_{k>=1} z^k S(ku)/((k-1)! S(u)^k) prod_{i<=k} (1+z/i)^{-1}.
Series inversion_slot(int u_order, int z_order) {
    Series s1 = s_function(1, SConvention::sin, u_order);
    Series inv_s1 = inverse_series(s1);

    Series slot = Series::zero(1);
    slot.u_lo = 0;
    slot.u_hi = u_order;
    slot.s_cap = z_order;
    slot.s_name = "z";

    Series s_inv_pow = unit_u_series(u_order);
    Series inv_prod = z_unit(z_order);
    for (int k = 1; k <= z_order + 1; ++k) {
        s_inv_pow = s_inv_pow * inv_s1;
        inv_prod = inv_prod * geometric_factor(k, z_order);
        Series upart = s_function(k, SConvention::sin, u_order) * s_inv_pow *
                       Scalar(rat(mpz_class(1), factorial(k - 1)));
        for (const auto& [uk, uc] : upart.coef) {
            for (const auto& [zk, zc] : inv_prod.coef) {
                int zd = (k - 1) + zk.s[0];
                if (zd > z_order) continue;
                slot.add_at(SeriesKey{uk.u, {zd}}, uc * zc);
            }
        }
    }
    return slot;
}

// Lift an ns=1 slot into variable position k of an ns=r series.
Series embed_slot(const Series& slot, int r, int k) {
    Series out = Series::zero(r);
    out.u_lo = slot.u_lo;
    out.u_hi = slot.u_hi;
    out.s_cap = slot.s_cap;
    out.s_name = "z";
    for (const auto& [key, c] : slot.coef) {
        std::vector<int> s(static_cast<size_t>(r), 0);
        s[static_cast<size_t>(k)] = key.s[0];
        out.coef.emplace(SeriesKey{key.u, std::move(s)}, c);
    }
    return out;
}

// Lift a pure u-series to ns=r with all z-exponents zero.
Series lift_u_series(const Series& f, int r) {
    Series out = Series::zero(r);
    out.u_lo = f.u_lo;
    out.u_hi = f.u_hi;
    out.s_cap = Series::EXACT;
    out.s_name = "z";
    for (const auto& [key, c] : f.coef)
        out.coef.emplace(SeriesKey{key.u, std::vector<int>(static_cast<size_t>(r), 0)}, c);
    return out;
}

} // namespace

Series f0_series(int u_order) {
    Series s1 = s_function(1, SConvention::sin, u_order);
    return inverse_series(s1 * s1);
}

Series a_series(long k, int u_order) {
    if (k < 1) throw std::invalid_argument("a_series needs k >= 1");
    Series s1 = s_function(1, SConvention::sin, u_order);
    Series s_pow = inverse_series(s1); // S(u)^{j-2} for j = 1
    Series total = Series::zero(0);
    for (long j = 1; j <= k; ++j) {
        if (j > 1) s_pow = s_pow * s1;
        mpz_class count = factorial(j) * binomial(k - 1, k - j);
        mpq_class cj = rat(count, mpz_class(1)) * pow_rat(rat(k), -j);
        total = total + s_function(j, SConvention::sin, u_order) * Scalar(cj) * s_pow;
    }
    return total;
}

Series b_series(long l, int u_order) {
    if (l < 0) throw std::invalid_argument("b_series needs l >= 0");
    Series s1 = s_function(1, SConvention::sin, u_order);
    return s_function(l + 1, SConvention::sin, u_order) * inverse_series(pow(s1, l + 1));
}

Series c_series(long k, long l, int u_order) {
    Series s1 = s_function(1, SConvention::sin, u_order);
    return a_series(k, u_order) * b_series(l, u_order) * s1 * s1;
}

HodgeSeriesBundle make_hodge_bundle(long k_max, long l_max, int u_order) {
    if (k_max < 1 || l_max < 0) throw std::invalid_argument("hodge bundle needs k_max >= 1, l_max >= 0");
    HodgeSeriesBundle bundle;
    bundle.f0 = f0_series(u_order);
    for (long k = 1; k <= k_max; ++k) bundle.a.push_back(a_series(k, u_order));
    for (long l = 0; l <= l_max; ++l) bundle.b.push_back(b_series(l, u_order));
    bundle.c.resize(static_cast<size_t>(k_max));
    for (long k = 1; k <= k_max; ++k)
        for (long l = 0; l <= l_max; ++l)
            bundle.c[static_cast<size_t>(k - 1)].push_back(c_series(k, l, u_order));
    return bundle;
}

Series f_series(int r, long d, int u_order, int z_order) {
    if (r < 0) throw std::invalid_argument("f_series needs r >= 0");
    if (d < 1) throw std::invalid_argument("f_series needs d >= 1");
    if (z_order < 0) throw std::invalid_argument("f_series needs z_order >= 0");

    if (r == 0) {
        Series sd = s_function(d, SConvention::sin, u_order);
        Series out = inverse_series(sd * sd) * Scalar(pow_rat(rat(d), -3));
        if (d == 1) {
            if (!equal_on_common_window(out, f0_series(u_order)))
                throw std::runtime_error("degree-zero bracket disagrees with 1/S(u)^2");
        } else {
            Series expected = u_rescale(f0_series(u_order), d) * Scalar(pow_rat(rat(d), -3));
            if (!equal_on_common_window(out, expected))
                throw std::runtime_error("bracket series violates the degree rescaling rule");
        }
        return out;
    }

    Series slot = bracket_slot(d, u_order, z_order);
    if (d == 1 && !equal_on_common_window(slot, inversion_slot(u_order, z_order)))
        throw std::runtime_error("hypergeometric bracket disagrees with the inversion series");

    Series out = embed_slot(slot, r, 0);
    for (int k = 1; k < r; ++k) out = out * embed_slot(slot, r, k);
    Series prefactor = Series::constant(Scalar(pow_rat(rat(d), -3)), 0).with_u_hi(u_order);
    if (r >= 2) {
        Series sd = s_function(d, SConvention::sin, u_order);
        prefactor = prefactor * pow(sd, 2L * r - 2);
    }
    out = out * lift_u_series(prefactor, r);

    if (d > 1) {
        Series expected = u_rescale(f_series(r, 1, u_order, z_order), d) *
                          Scalar(pow_rat(rat(d), r - 3));
        if (!equal_on_common_window(out, expected))
            throw std::runtime_error("bracket series violates the degree rescaling rule");
    }
    return out;
}

std::vector<CheckResult> inversion_identities(long m_max, int u_order) {
    if (m_max < 1) throw std::invalid_argument("inversion_identities needs m_max >= 1");
    std::vector<CheckResult> results;
    Series s1 = s_function(1, SConvention::sin, u_order);

    CheckResult a_binomial{"a-binomial", true, ""};
    for (long m = 1; m <= m_max && a_binomial.pass; ++m) {
        Series lhs = s_function(m, SConvention::sin, u_order) *
                     (m >= 2 ? pow(s1, m - 2) : inverse_series(s1));
        Series rhs = Series::zero(0);
        for (long a = 1; a <= m; ++a) {
            mpz_class count = binomial(m, a);
            mpq_class ca = rat(count, factorial(m)) * pow_rat(rat(a), m);
            if ((m - a) % 2 != 0) ca = -ca;
            rhs = rhs + a_series(a, u_order) * Scalar(ca);
        }
        if (!equal_on_common_window(lhs, rhs)) {
            a_binomial.pass = false;
            a_binomial.detail = "fails at m = " + std::to_string(m);
        }
    }
    results.push_back(a_binomial);

    Series f = f_series(1, 1, u_order, static_cast<int>(m_max));
    std::vector<Series> f_slices;
    for (long m = 0; m <= m_max; ++m) f_slices.push_back(f.s_slice({static_cast<int>(m)}));
    std::vector<Series> b_list;
    for (long l = 0; l <= m_max; ++l) b_list.push_back(b_series(l, u_order));

    CheckResult b_from_f{"b-from-f", true, ""};
    for (long m = 1; m <= m_max && b_from_f.pass; ++m) {
        std::vector<mpq_class> e = elementary_coeffs(reciprocal_args(m), m);
        Series rhs = Series::zero(0);
        for (long k = 0; k <= m; ++k) {
            mpq_class ck = rat(factorial(m), mpz_class(1)) * e[static_cast<size_t>(m - k)];
            rhs = rhs + f_slices[static_cast<size_t>(k)] * Scalar(ck);
        }
        if (!equal_on_common_window(b_list[static_cast<size_t>(m)], rhs)) {
            b_from_f.pass = false;
            b_from_f.detail = "fails at m = " + std::to_string(m);
        }
    }
    results.push_back(b_from_f);

    CheckResult f_from_b{"f-from-b", true, ""};
    for (long m = 1; m <= m_max && f_from_b.pass; ++m) {
        Series rhs = Series::zero(0);
        for (long k = 0; k <= m; ++k) {
            std::vector<mpq_class> h = complete_coeffs(reciprocal_args(k + 1), m - k);
            mpq_class ck = rat(mpz_class(1), factorial(k)) * h[static_cast<size_t>(m - k)];
            if ((m - k) % 2 != 0) ck = -ck;
            rhs = rhs + b_list[static_cast<size_t>(k)] * Scalar(ck);
        }
        if (!equal_on_common_window(f_slices[static_cast<size_t>(m)], rhs)) {
            f_from_b.pass = false;
            f_from_b.detail = "fails at m = " + std::to_string(m);
        }
    }
    results.push_back(f_from_b);

    return results;
}

std::pair<mpq_class, mpq_class> tree_sum_identity(long m, long a) {
    if (a < 1 || a > m - 1) throw std::invalid_argument("tree_sum_identity needs 1 <= a <= m-1");
    mpq_class lhs(0);
    for (const Partition& rho : partitions_of(m - a)) {
        mpq_class term = rat(mpz_class(1), rho.aut());
        for (long p : rho.parts) {
            term *= pow_rat(rat(p), p - 1);
            mpz_class pf = factorial(p);
            term /= mpq_class(pf);
        }
        term *= pow_rat(rat(-m), rho.length());
        lhs += term;
    }
    mpq_class rhs = rat(-m) * pow_rat(rat(-a), m - a - 1) / mpq_class(factorial(m - a));
    return {lhs, rhs};
}

} // namespace gwkit
