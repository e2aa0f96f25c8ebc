#include "gwkit/threefold.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace gwkit {

namespace {

Scalar fiber_weight() { return Scalar::t1() + Scalar::t2(); }

// prod over parts of (alpha . label class); zero if any label is the identity.
Scalar label_product(const SurfaceModel& s, const CurveClass& alpha,
                     const WeightedPartition& p) {
    Scalar out(1);
    for (const auto& part : p.parts) {
        if (part.label == 0) return Scalar();
        out = out * intersection(s, alpha, CohClass::omega_basis(part.label, s.rank));
        if (out.is_zero()) return out;
    }
    return out;
}

// prod_i S(d mu_i u) prod_j S(d nu_j u) / S(du)^2 to the exclusive u-order.
Series boundary_ratio(const WeightedPartition& mu, const WeightedPartition& nu,
                      long d, int u_order) {
    Series f = Series::constant(Scalar(1), 0).with_u_hi(u_order);
    for (const auto& part : mu.parts)
        f = f * s_function(static_cast<int>(d * part.size), SConvention::sin, u_order);
    for (const auto& part : nu.parts)
        f = f * s_function(static_cast<int>(d * part.size), SConvention::sin, u_order);
    const Series sd = s_function(static_cast<int>(d), SConvention::sin, u_order);
    return f / (sd * sd);
}

void require_matched_sizes(const WeightedPartition& mu, const WeightedPartition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("relative boundary conditions need |mu| = |nu|");
}

enum class MidpointKind { identity, double_point, divisor };

// Recognizes (1^m), (2, 1^{m-2}) and ((1, omega_k), 1^{m-1}); anything else
// needs the degree-zero cap contributions, which live outside this model.
std::pair<MidpointKind, int> classify_midpoint(const WeightedPartition& rho) {
    int twos = 0, omegas = 0, omega_label = 0, others = 0;
    for (const auto& p : rho.parts) {
        if (p.size == 1 && p.label == 0)
            continue;
        if (p.size == 2 && p.label == 0)
            ++twos;
        else if (p.size == 1 && p.label >= 1) {
            ++omegas;
            omega_label = p.label;
        } else {
            ++others;
        }
    }
    if (others == 0 && twos + omegas <= 1) {
        if (twos == 1) return {MidpointKind::double_point, 0};
        if (omegas == 1) return {MidpointKind::divisor, omega_label};
        return {MidpointKind::identity, 0};
    }
    throw std::invalid_argument(
        "midpoint insertion outside {(2), (1,omega_k), identity} needs degree-zero caps");
}

} // namespace

Series rubber_series(const RubberSpec& spec, int u_order) {
    require_matched_sizes(spec.mu, spec.nu);
    if (spec.d < 1) throw std::invalid_argument("rubber series needs d >= 1");
    CurveClass beta;
    beta.e.reserve(spec.root.e.size());
    for (long c : spec.root.e) beta.e.push_back(spec.d * c);
    const auto split = is_root_multiple(spec.surface, beta);
    if (!split) return Series::zero(0);
    const CurveClass& alpha = split->first;
    const long d = split->second;

    Scalar lab = label_product(spec.surface, alpha, spec.mu) *
                 label_product(spec.surface, alpha, spec.nu);
    if (lab.is_zero()) return Series::zero(0);

    const long ell = spec.mu.length() + spec.nu.length();
    const mpz_class auts = spec.mu.aut() * spec.nu.aut();
    const mpq_class scale = pow_rat(mpq_class(d), ell - 3) / mpq_class(auts);
    const Series ratio = boundary_ratio(spec.mu, spec.nu, d, u_order);
    return ratio * (fiber_weight() * lab * Scalar(scale));
}

Series theta_connected(const SurfaceModel& s, const WeightedPartition& mu,
                       const WeightedPartition& nu, int u_order, int s_cap) {
    require_matched_sizes(mu, nu);
    const int ell = mu.length() + nu.length();
    const int offset = ell - 2;

    Series total = Series::zero(s.rank);
    total.u_lo = offset;
    total.u_hi = u_order;
    total.s_cap = s_cap;
    if (u_order <= offset || s_cap < 1) return total;

    struct RootTerm {
        Scalar lab;
        std::vector<int> expo;
        int deg;
    };
    std::vector<RootTerm> roots;
    int min_deg = 0;
    for (const auto& re : s.positive_roots) {
        const CurveClass alpha{re};
        Scalar lab = label_product(s, alpha, mu) * label_product(s, alpha, nu);
        if (lab.is_zero()) continue;
        std::vector<int> expo = s_monomial(alpha);
        const int deg = std::accumulate(expo.begin(), expo.end(), 0);
        if (min_deg == 0 || deg < min_deg) min_deg = deg;
        roots.push_back({std::move(lab), std::move(expo), deg});
    }
    if (roots.empty()) return total;

    const mpz_class auts = mu.aut() * nu.aut();
    const Scalar overall = fiber_weight() * Scalar(rat(mpz_class(1), auts));
    for (long d = 1; d * min_deg <= s_cap; ++d) {
        const mpq_class dpow = pow_rat(mpq_class(d), ell - 3); // d^{ell-2} / d
        const Series base = u_shift(boundary_ratio(mu, nu, d, u_order - offset), offset) *
                            (overall * Scalar(dpow));
        for (const auto& root : roots) {
            if (d * root.deg > s_cap) continue;
            std::vector<int> expo = root.expo;
            for (int& x : expo) x *= static_cast<int>(d);
            Series term = Series::zero(s.rank);
            term.u_lo = base.u_lo;
            term.u_hi = base.u_hi;
            term.s_cap = s_cap;
            for (const auto& [key, c] : base.coef) {
                Scalar v = c * root.lab;
                if (!v.is_zero()) term.coef.emplace(SeriesKey{key.u, expo}, std::move(v));
            }
            total = total + term;
        }
    }
    return total;
}

Series theta_disconnected(const SurfaceModel& s, const WeightedPartition& mu,
                          const WeightedPartition& nu, int u_order, int s_cap) {
    require_matched_sizes(mu, nu);
    Series total = Series::zero(s.rank);
    for (const auto& split : common_subpartitions(mu, nu)) {
        Scalar w = fock_basis_pairing(s, split.common, split.common);
        if (w.is_zero()) continue;
        if ((split.common.size() - split.common.length()) % 2 != 0) w = -w;
        total = total + theta_connected(s, split.mu_rest, split.nu_rest, u_order, s_cap) * w;
    }
    return total;
}

WeightedPartition double_point_operator(long m) {
    if (m < 2) throw std::invalid_argument("double point insertion needs m >= 2");
    std::vector<WeightedPart> parts{{2, 0}};
    parts.insert(parts.end(), static_cast<size_t>(m - 2), WeightedPart{1, 0});
    return WeightedPartition::make(std::move(parts));
}

WeightedPartition divisor_operator(long m, int k) {
    if (m < 1) throw std::invalid_argument("divisor insertion needs m >= 1");
    if (k < 1) throw std::invalid_argument("divisor insertion needs a divisor label");
    std::vector<WeightedPart> parts{{1, k}};
    parts.insert(parts.end(), static_cast<size_t>(m - 1), WeightedPart{1, 0});
    return WeightedPartition::make(std::move(parts));
}

WeightedPartition identity_operator(long m) {
    if (m < 0) throw std::invalid_argument("identity insertion needs m >= 0");
    return WeightedPartition::make(std::vector<WeightedPart>(static_cast<size_t>(m), {1, 0}));
}

Series divisor_partition_function(const SurfaceModel& s, const WeightedPartition& mu,
                                  const WeightedPartition& nu, const WeightedPartition& rho,
                                  int u_order, int s_cap) {
    require_matched_sizes(mu, nu);
    if (mu.size() < 1) throw std::invalid_argument("relative partition function needs m >= 1");
    if (rho.size() != mu.size())
        throw std::invalid_argument("midpoint insertion must also partition m");
    const auto [kind, label] = classify_midpoint(rho);
    if (kind == MidpointKind::divisor && label > s.rank)
        throw std::invalid_argument("divisor label exceeds the surface rank");
    const int ell = mu.length() + nu.length();
    switch (kind) {
    case MidpointKind::identity:
        // Every nonzero-degree connected piece needs a non-identity insertion.
        return Series::zero(s.rank);
    case MidpointKind::double_point:
        return u_shift(differentiate_u(theta_disconnected(s, mu, nu, u_order, s_cap)), 1 - ell);
    case MidpointKind::divisor:
        return u_shift(s_log_derivative(theta_disconnected(s, mu, nu, u_order, s_cap), label),
                       -ell);
    }
    throw std::logic_error("unreachable midpoint kind");
}

Series ring_structure_constant(const SurfaceModel& s, const WeightedPartition& mu,
                               const WeightedPartition& nu, const WeightedPartition& rho,
                               int u_order, int s_cap) {
    require_matched_sizes(mu, nu);
    if (rho.size() != mu.size())
        throw std::invalid_argument("midpoint insertion must also partition m");
    const auto [kind, label] = classify_midpoint(rho);
    (void)label;
    if (kind == MidpointKind::identity)
        return Series::constant(fock_basis_pairing(s, mu, nu), s.rank);
    const int ell = mu.length() + nu.length();
    const int power = kind == MidpointKind::double_point ? ell - 1 : ell;
    const Series z = divisor_partition_function(s, mu, nu, rho, u_order, s_cap);
    return u_shift(z, power) * Scalar(i_power(-power));
}

QRationalityReport q_rationality_check(const Series& z, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("rationality check needs a degree budget");
    QRationalityReport report;
    bool first = true;
    for (const auto& mono : z.s_support()) {
        const Series slice = z.s_slice(mono);
        MonomialFit entry;
        entry.monomial = mono;
        QFitCache cache;
        for (int deg = 1;;) {
            entry.fit = fit_rational_in_q(slice, deg, cache);
            entry.degree_used = deg;
            if (!entry.fit.residual_flag || deg >= max_degree) break;
            deg = std::min(deg * 2, max_degree);
        }
        report.all_pass = report.all_pass && !entry.fit.residual_flag;
        if (first || entry.fit.matched_coefficient_count < report.min_matched)
            report.min_matched = entry.fit.matched_coefficient_count;
        first = false;
        report.monomials.push_back(std::move(entry));
    }
    return report;
}

} // namespace gwkit
