#include "gwkit/qfit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gwkit {

namespace {

// --- dense univariate polynomials over the Scalar field ---

using SPoly = std::vector<Scalar>;

void sp_trim(SPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly sp_scale(const SPoly& p, const Scalar& c) {
    SPoly r(p.size(), Scalar(0));
    for (size_t k = 0; k < p.size(); ++k) r[k] = p[k] * c;
    sp_trim(r);
    return r;
}

SPoly sp_rem(SPoly a, const SPoly& b) {
    sp_trim(a);
    if (b.empty()) throw std::domain_error("sp_rem: division by zero polynomial");
    Scalar lead_inv = inverse(b.back());
    while (a.size() >= b.size()) {
        Scalar q = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] = a[shift + k] - q * b[k];
        a.pop_back();
        sp_trim(a);
    }
    return a;
}

SPoly sp_divexact(SPoly a, const SPoly& b) {
    sp_trim(a);
    if (b.empty()) throw std::domain_error("sp_divexact: division by zero polynomial");
    Scalar lead_inv = inverse(b.back());
    SPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
    while (a.size() >= b.size()) {
        Scalar c = a.back() * lead_inv;
        q[a.size() - b.size()] = c;
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] = a[shift + k] - c * b[k];
        a.pop_back();
        sp_trim(a);
    }
    if (!a.empty()) throw std::domain_error("sp_divexact: inexact division");
    sp_trim(q);
    return q;
}

SPoly sp_gcd(SPoly a, SPoly b) {
    sp_trim(a);
    sp_trim(b);
    while (!b.empty()) {
        SPoly r = sp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = sp_scale(a, inverse(a.back()));
    return a;
}

// Coefficient of u^k, treating exponents below the proven-zero bound as 0.
Scalar coeff_or_zero(const Series& f, int k) {
    if (k < f.u_lo) return Scalar(0);
    return f.at(k);
}

// Returns the canonical null-space vector together with the null-space
// dimension (cols - rank), or nullopt when the null space is trivial.
template <class F>
std::optional<std::pair<std::vector<F>, int>> nullspace_vector_impl(
    std::vector<std::vector<F>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) { pr = i; break; }
        }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        F inv = inverse(m[r][c]);
        for (int k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            F factor = m[i][c];
            for (int k = c; k < cols; ++k) m[i][k] = m[i][k] - factor * m[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot[c]) { free_col = c; break; }
    }
    if (free_col < 0) return std::nullopt;
    std::vector<F> v(cols, F(0));
    v[free_col] = F(1);
    for (size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = F(0) - m[p][free_col];
    return std::make_pair(std::move(v), cols - static_cast<int>(pivot_col.size()));
}

} // namespace

Series q_power_series(int j, int u_order) {
    // (-exp(iu))^j = (-1)^j exp(iju)
    Series e = exp_series(GaussRat::i() * GaussRat(j), u_order);
    if (j % 2 != 0) e = e * Scalar(-1);
    return e;
}

std::optional<std::vector<Scalar>> nullspace_vector(std::vector<std::vector<Scalar>> m, int cols) {
    auto r = nullspace_vector_impl(std::move(m), cols);
    if (!r) return std::nullopt;
    return std::move(r->first);
}

std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i) {
            if (!m[i][c].is_zero()) { pr = i; break; }
        }
        if (pr < 0) throw std::domain_error("invert_matrix: singular matrix");
        std::swap(m[c], m[pr]);
        std::swap(inv[c], inv[pr]);
        Scalar d = inverse(m[c][c]);
        for (int k = 0; k < n; ++k) {
            m[c][k] = m[c][k] * d;
            inv[c][k] = inv[c][k] * d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (int k = 0; k < n; ++k) {
                m[i][k] = m[i][k] - f * m[c][k];
                inv[i][k] = inv[i][k] - f * inv[c][k];
            }
        }
    }
    return inv;
}

RationalFitResult fit_rational_in_q(const Series& f, int max_degree) {
    QFitCache cache;
    return fit_rational_in_q(f, max_degree, cache);
}

RationalFitResult fit_rational_in_q(const Series& f, int max_degree, QFitCache& cache) {
    if (f.ns != 0) throw std::invalid_argument("fit_rational_in_q: series must be u-only");
    if (max_degree < 0) throw std::invalid_argument("fit_rational_in_q: max_degree must be >= 0");
    const int d = max_degree;
    const int unknowns = 2 * (d + 1);

    const int lo_row = std::min(f.u_lo, 0);
    // An exact u-polynomial is known everywhere; synthesize enough rows.
    int eff_hi = f.u_hi;
    if (f.u_hi >= Series::EXACT) {
        int support_hi = 0;
        if (!f.coef.empty()) support_hi = std::max(0, f.coef.rbegin()->first.u + 1);
        eff_hi = support_hi + unknowns + 8 + std::max(0, -lo_row);
    }
    const int total_rows = eff_hi - lo_row;
    if (total_rows < unknowns) {
        throw std::runtime_error(
            "fit_rational_in_q: underdetermined fit; max_degree " + std::to_string(d) +
            " needs at least " + std::to_string(unknowns + std::max(0, -lo_row)) +
            " known u-orders, have " + std::to_string(total_rows));
    }

    // The exact-polynomial branch sizes its window from the degree budget, so
    // its q-powers cannot be shared across budgets; use a throwaway memo.
    QFitCache local;
    QFitCache& memo = f.u_hi < Series::EXACT ? cache : local;

    // Powers of q = -exp(iu), expanded far enough that f * q^j is known to eff_hi.
    const int q_order = eff_hi - lo_row;
    if (!memo.primed) {
        memo.primed = true;
        // Factor out the scalar content of f.  Theta slices are a single
        // rational-function multiple of a Gaussian-rational series, and on
        // that shape the elimination runs over Q(i) instead of the function
        // field; column scaling preserves the pivot pattern, so the fit is
        // unchanged.
        for (const auto& [key, val] : f.coef) {
            if (!val.is_zero()) { memo.content = val; break; }
        }
        memo.reduced = f * inverse(memo.content);
        memo.constant_coeffs = true;
        for (const auto& [key, val] : memo.reduced.coef) {
            if (!val.is_constant()) { memo.constant_coeffs = false; break; }
        }
    }
    while (static_cast<int>(memo.q_powers.size()) <= d) {
        const int j = static_cast<int>(memo.q_powers.size());
        memo.q_powers.push_back(q_power_series(j, q_order));
        memo.products.push_back((memo.constant_coeffs ? memo.reduced : f) *
                                memo.q_powers.back());
    }
    const std::vector<Series>& qp = memo.q_powers;
    const Scalar& content = memo.content;

    const int prefix = unknowns - 1;
    std::optional<std::vector<Scalar>> v;
    long matched = 0;
    bool ok = false;

    if (memo.constant_coeffs) {
        const std::vector<Series>& gqp = memo.products;
        auto make_row = [&](int k) {
            std::vector<GaussRat> row(unknowns, GaussRat(0));
            for (int j = 0; j <= d; ++j) {
                row[j] = coeff_or_zero(qp[j], k).constant_value();
                row[d + 1 + j] = -coeff_or_zero(gqp[j], k).constant_value();
            }
            return row;
        };
        auto check_rows = [&](const std::vector<GaussRat>& w, long& hits) {
            hits = 0;
            bool fits = true;
            for (int k = lo_row + prefix; k < eff_hi; ++k) {
                std::vector<GaussRat> row = make_row(k);
                GaussRat acc(0);
                for (int c = 0; c < unknowns; ++c) acc += row[c] * w[c];
                if (acc.is_zero()) ++hits;
                else fits = false;
            }
            return fits;
        };
        std::vector<std::vector<GaussRat>> head;
        head.reserve(prefix);
        for (int k = lo_row; k < lo_row + prefix; ++k) head.push_back(make_row(k));
        auto w = nullspace_vector_impl(std::move(head), unknowns);
        ok = w.has_value() && check_rows(w->first, matched);
        if (!ok && w && w->second > 1) {
            // The prefix system has several independent solutions and the
            // canonical one failed a spare row; only then can the full system
            // single out a different vector that fits every coefficient.
            std::vector<std::vector<GaussRat>> all;
            all.reserve(total_rows);
            for (int k = lo_row; k < eff_hi; ++k) all.push_back(make_row(k));
            auto w2 = nullspace_vector_impl(std::move(all), unknowns);
            if (w2) {
                w = std::move(w2);
                ok = check_rows(w->first, matched);
            }
        }
        if (w) {
            // Undo the column scaling: f = content * g, so numerator
            // coefficients pick the content back up.
            std::vector<Scalar> vs(unknowns, Scalar(0));
            for (int j = 0; j <= d; ++j) vs[j] = Scalar(w->first[j]) * content;
            for (int j = 0; j <= d; ++j) vs[d + 1 + j] = Scalar(w->first[d + 1 + j]);
            v = std::move(vs);
        }
    } else {
        const std::vector<Series>& fqp = memo.products;

        // Row for u^k: sum_j p_j [u^k]q^j - sum_j q_j [u^k](f q^j) = 0.
        auto make_row = [&](int k) {
            std::vector<Scalar> row(unknowns, Scalar(0));
            for (int j = 0; j <= d; ++j) {
                row[j] = coeff_or_zero(qp[j], k);
                row[d + 1 + j] = Scalar(0) - coeff_or_zero(fqp[j], k);
            }
            return row;
        };

        auto check_rows = [&](const std::vector<Scalar>& w, long& hits) {
            hits = 0;
            bool fits = true;
            for (int k = lo_row + prefix; k < eff_hi; ++k) {
                std::vector<Scalar> row = make_row(k);
                Scalar acc(0);
                for (int c = 0; c < unknowns; ++c) acc = acc + row[c] * w[c];
                if (acc.is_zero()) ++hits;
                else fits = false;
            }
            return fits;
        };

        std::vector<std::vector<Scalar>> head;
        head.reserve(prefix);
        for (int k = lo_row; k < lo_row + prefix; ++k) head.push_back(make_row(k));
        auto hv = nullspace_vector_impl(std::move(head), unknowns);
        if (hv) v = std::move(hv->first);
        ok = hv.has_value() && check_rows(*v, matched);
        if (!ok && hv && hv->second > 1) {
            std::vector<std::vector<Scalar>> all;
            all.reserve(total_rows);
            for (int k = lo_row; k < eff_hi; ++k) all.push_back(make_row(k));
            auto w = nullspace_vector(std::move(all), unknowns);
            if (w) {
                v = std::move(w);
                ok = check_rows(*v, matched);
            }
        }
    }

    RationalFitResult res;
    res.matched_coefficient_count = matched;
    res.residual_flag = !ok;
    if (!v) throw std::logic_error("fit_rational_in_q: empty null space for underdetermined prefix");

    SPoly num(v->begin(), v->begin() + (d + 1));
    SPoly den(v->begin() + (d + 1), v->end());
    sp_trim(num);
    sp_trim(den);
    if (!num.empty() && !den.empty()) {
        SPoly g = sp_gcd(num, den);
        if (g.size() > 1) {
            num = sp_divexact(num, g);
            den = sp_divexact(den, g);
        }
    }
    const SPoly& anchor = den.empty() ? num : den;
    for (const Scalar& c : anchor) {
        if (!c.is_zero()) {
            Scalar inv = inverse(c);
            num = sp_scale(num, inv);
            den = sp_scale(den, inv);
            break;
        }
    }
    res.numerator = std::move(num);
    res.denominator = std::move(den);
    return res;
}

Series expand_fit(const RationalFitResult& fit, int u_lo, int u_hi) {
    // Expand far enough that trailing q-power windows survive the division.
    const int order = (u_hi - std::min(u_lo, 0)) + 4;
    auto eval = [&](const std::vector<Scalar>& poly) {
        Series acc = Series::zero(0);
        for (size_t j = 0; j < poly.size(); ++j) {
            if (poly[j].is_zero()) continue;
            acc = acc + q_power_series(static_cast<int>(j), order) * poly[j];
        }
        return acc;
    };
    Series num = eval(fit.numerator);
    Series den = eval(fit.denominator);
    return (num / den).with_u_hi(u_hi);
}

} // namespace gwkit
