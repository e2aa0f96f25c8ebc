#include "gwkit/suites.hpp"

#include "gwkit/fock.hpp"
#include "gwkit/hodge.hpp"
#include "gwkit/hurwitz.hpp"
#include "gwkit/threefold.hpp"
#include "gwkit/virasoro.hpp"

#include <functional>
#include <sstream>

namespace gwkit {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

WeightedPartition wp(std::vector<WeightedPart> parts) {
    return WeightedPartition::make(std::move(parts));
}

FockVector heisenberg_commutator(const SurfaceModel& s, long k, int lk, long l, int ll,
                                 const FockVector& v) {
    FockVector ab = apply_heisenberg(s, k, lk, apply_heisenberg(s, l, ll, v));
    FockVector ba = apply_heisenberg(s, l, ll, apply_heisenberg(s, k, lk, v));
    for (const auto& [p, c] : ba) {
        Scalar& slot = ab[p];
        slot -= c;
        if (slot.is_zero()) ab.erase(p);
    }
    return ab;
}

// Dimension-valid removal targets with g <= 3, r <= 2 identity and s <= 2
// stationary insertions.
std::vector<BracketTarget> removal_grid() {
    std::vector<BracketTarget> grid;
    for (long g = 0; g <= 3; ++g)
        for (int r = 0; r <= 2; ++r)
            for (int s = 0; s <= 2; ++s) {
                long need = g + r;
                std::vector<long> a_list, b_list;
                std::function<void(int, long, long)> fill_b = [&](int pos, long rest, long lo) {
                    if (pos == s) {
                        if (rest == 0) grid.push_back({g, a_list, b_list});
                        return;
                    }
                    for (long b = lo; b <= rest; ++b) {
                        b_list.push_back(b);
                        fill_b(pos + 1, rest - b, b);
                        b_list.pop_back();
                    }
                };
                std::function<void(int, long, long)> fill_a = [&](int pos, long rest, long lo) {
                    if (pos == r) {
                        fill_b(0, rest, 0);
                        return;
                    }
                    for (long a = lo; a <= rest; ++a) {
                        a_list.push_back(a);
                        fill_a(pos + 1, rest - a, a);
                        a_list.pop_back();
                    }
                };
                fill_a(0, need, 1);
            }
    return grid;
}

} // namespace

CheckResult suite_closed_formula(const SuiteOptions& opts) {
    CheckResult out{"closed-formula", true, ""};
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);

    for (long d = 1; d <= 6 && out.pass; ++d) {
        InvariantSpec spec;
        spec.beta = CurveClass{{d}};
        mpq_class expected = pow_rat(rat(d), -3);
        if (opts.inject_convention_flip) expected = -expected;
        InvariantValue got = reduced_invariant(a1, spec);
        if (got.value != expected) {
            out.pass = false;
            out.detail = "no-insertion degree " + std::to_string(d) + ": got " +
                         q_str(got.value) + ", expected " + q_str(expected);
        }
    }

    if (out.pass) {
        InvariantSpec spec;
        spec.genus = 1;
        spec.beta = CurveClass{{1}};
        spec.div_descendents = {{1, 1}};
        InvariantValue got = reduced_invariant(a1, spec);
        if (got.value != rat(-1, 12)) {
            out.pass = false;
            out.detail = "single stationary descendent at genus 1: got " + q_str(got.value);
        }
    }

    if (out.pass) {
        for (const CheckResult& c : consistency_suite()) {
            if (!c.pass) {
                out.pass = false;
                out.detail = c.name + ": " + c.detail;
                break;
            }
        }
    }
    return out;
}

CheckResult suite_hurwitz_oracles() {
    CheckResult out{"hurwitz-oracles", true, ""};
    for (long m = 1; m <= 3 && out.pass; ++m) {
        std::vector<Partition> parts = partitions_of(m);
        for (const Partition& rho : parts) {
            for (const Partition& lambda : parts) {
                for (long g = 0;; ++g) {
                    HurwitzQuery q{m, rho, lambda, g};
                    if (q.branch_count() > 6) break;
                    mpq_class lhs = hurwitz_enumerate(q);
                    mpq_class rhs = hurwitz_class_algebra(q);
                    if (lhs != rhs) {
                        out.pass = false;
                        out.detail = "m=" + std::to_string(m) + " genus " + std::to_string(g) +
                                     ": enumeration " + q_str(lhs) + " vs class algebra " +
                                     q_str(rhs);
                        break;
                    }
                }
                if (!out.pass) break;
            }
            if (!out.pass) break;
        }
    }
    return out;
}

CheckResult suite_one_part() {
    CheckResult out{"one-part-series", true, ""};
    const int u_order = 8; // genus <= 3
    for (long m = 1; m <= 5 && out.pass; ++m) {
        Partition one_part = Partition::make({m});
        for (const Partition& rho : partitions_of(m)) {
            Series lhs = signed_hurwitz_series(rho, one_part, u_order);
            Series rhs = one_part_series(rho, u_order);
            if (!equal_on_common_window(lhs, rhs)) {
                out.pass = false;
                out.detail = "m=" + std::to_string(m) + ", profile length " +
                             std::to_string(rho.length());
                break;
            }
        }
    }
    return out;
}

CheckResult suite_stationary_double() {
    CheckResult out{"stationary-p1", true, ""};
    const int u_order = 11; // through u^10
    Series s1 = s_function(1, SConvention::sin, u_order);
    for (long m = 1; m <= 5 && out.pass; ++m) {
        Partition one_part = Partition::make({m});
        std::vector<Partition> parts = partitions_of(m);
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                Series lhs;
                try {
                    lhs = stationary_p1_series(mu, nu, u_order);
                } catch (const std::exception& e) {
                    out.pass = false;
                    out.detail = "m=" + std::to_string(m) + ": " + e.what();
                    break;
                }
                mpz_class auts = mu.aut() * nu.aut();
                Series rhs = signed_hurwitz_series(mu, one_part, u_order) *
                             signed_hurwitz_series(nu, one_part, u_order) * s1 *
                             Scalar(rat(mpz_class(1), auts));
                if (!equal_on_common_window(lhs, rhs)) {
                    out.pass = false;
                    out.detail = "m=" + std::to_string(m) + ": assembled product differs";
                    break;
                }
            }
            if (!out.pass) break;
        }
    }
    return out;
}

CheckResult suite_localization() {
    CheckResult out{"localization-pairing", true, ""};
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    CohClass one = CohClass::identity(1);
    CohClass w = CohClass::omega_basis(1, 1);
    if (equivariant_pairing(a1, one, one) != Scalar(1) / (Scalar(2) * t1 * t2)) {
        out.pass = false;
        out.detail = "identity pairing is not 1/(2t1t2)";
        return out;
    }
    if (equivariant_pairing(a1, w, w) != Scalar(rat(-1, 2))) {
        out.pass = false;
        out.detail = "divisor self-pairing is not -1/2";
        return out;
    }
    for (int n = 1; n <= 5; ++n) {
        SurfaceModel s = build_surface(SurfaceKind::A, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Scalar expect(mpq_class(-s.cartan_inv[static_cast<size_t>(i - 1)]
                                                     [static_cast<size_t>(j - 1)]));
                Scalar got = equivariant_pairing(s, CohClass::omega_basis(i, n),
                                                 CohClass::omega_basis(j, n));
                if (got != expect) {
                    out.pass = false;
                    out.detail = "gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") at rank " + std::to_string(n);
                    return out;
                }
            }
    }
    return out;
}

CheckResult suite_rubber_theta() {
    CheckResult out{"rubber-theta", true, ""};
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int u_order = 8;

    // degree dependence is the pure monomial d^{l(mu)+l(nu)-3} after u -> du
    std::vector<std::pair<WeightedPartition, WeightedPartition>> pairs = {
        {wp({{1, 1}}), wp({{1, 1}})},
        {wp({{2, 1}}), wp({{1, 1}, {1, 1}})},
        {wp({{2, 1}, {1, 1}}), wp({{1, 1}, {1, 1}, {1, 1}})},
    };
    for (const auto& [mu, nu] : pairs) {
        RubberSpec spec;
        spec.surface = a1;
        spec.root = CurveClass{{1}};
        spec.mu = mu;
        spec.nu = nu;
        spec.d = 1;
        Series base = rubber_series(spec, u_order);
        long ell = mu.length() + nu.length();
        for (long d = 2; d <= 5; ++d) {
            spec.d = d;
            Series got = rubber_series(spec, u_order);
            Series expect = u_rescale(base, static_cast<int>(d)) * Scalar(pow_rat(rat(d), ell - 3));
            if (!equal_on_common_window(got, expect)) {
                out.pass = false;
                out.detail = "degree scaling fails at d=" + std::to_string(d);
                return out;
            }
        }
    }

    // boundary symmetry of both theta assemblies
    for (const auto& [mu, nu] : pairs) {
        if (!equal_on_common_window(theta_connected(a1, mu, nu, 6, 3),
                                    theta_connected(a1, nu, mu, 6, 3)) ||
            !equal_on_common_window(theta_disconnected(a1, mu, nu, 6, 3),
                                    theta_disconnected(a1, nu, mu, 6, 3))) {
            out.pass = false;
            out.detail = "boundary symmetry fails";
            return out;
        }
    }

    // no common part: the subpartition sum collapses to the connected series
    {
        WeightedPartition mu = wp({{2, 1}});
        WeightedPartition nu = wp({{1, 1}, {1, 1}});
        if (!equal_on_common_window(theta_disconnected(a1, mu, nu, 6, 3),
                                    theta_connected(a1, mu, nu, 6, 3))) {
            out.pass = false;
            out.detail = "disjoint boundaries still differ from the connected series";
            return out;
        }
    }

    // Heisenberg commutators on every basis element of size <= 4
    for (long m = 0; m <= 4; ++m) {
        for (const WeightedPartition& w : weighted_partitions_of(m, 2)) {
            FockVector v = fock_basis(w);
            for (long k = 1; k <= 4; ++k)
                for (int lk = 0; lk <= 1; ++lk)
                    for (int ll = 0; ll <= 1; ++ll) {
                        FockVector c = heisenberg_commutator(a1, k, lk, -k, ll, v);
                        FockVector expect;
                        Scalar factor = Scalar(-k) * label_pairing(a1, lk, ll);
                        if (!factor.is_zero())
                            for (const auto& [p, x] : v) expect[p] = x * factor;
                        if (c != expect) {
                            out.pass = false;
                            out.detail = "commutator at k=" + std::to_string(k) + " on size " +
                                         std::to_string(m);
                            return out;
                        }
                        if (k < 4 &&
                            !heisenberg_commutator(a1, k, lk, -(k + 1), ll, v).empty()) {
                            out.pass = false;
                            out.detail = "non-opposite modes fail to commute";
                            return out;
                        }
                    }
        }
    }
    return out;
}

CheckResult suite_q_rationality() {
    CheckResult out{"q-rationality", true, ""};
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int u_order = 104;
    const int s_cap = 6;
    long min_matched = -1;
    for (long m = 1; m <= 3 && out.pass; ++m) {
        std::vector<WeightedPartition> boundaries;
        for (const Partition& p : partitions_of(m))
            boundaries.push_back(WeightedPartition::uniform(p, 1));
        std::vector<WeightedPartition> ops;
        ops.push_back(divisor_operator(m, 1));
        if (m >= 2) ops.push_back(double_point_operator(m));
        // The structure constants are symmetric in the boundary pair (the
        // rubber-theta suite checks this), so fit each unordered pair once.
        for (size_t i = 0; i < boundaries.size() && out.pass; ++i) {
            for (size_t j = i; j < boundaries.size() && out.pass; ++j) {
                for (const WeightedPartition& op : ops) {
                    Series z = ring_structure_constant(a1, boundaries[i], boundaries[j], op,
                                                       u_order, s_cap);
                    QRationalityReport report = q_rationality_check(z, 44);
                    if (!report.all_pass) {
                        out.pass = false;
                        out.detail = "m=" + std::to_string(m) + ": a coefficient resists a degree-44 fit";
                        break;
                    }
                    if (!report.monomials.empty() &&
                        (min_matched < 0 || report.min_matched < min_matched))
                        min_matched = report.min_matched;
                }
            }
        }
    }
    if (out.pass && min_matched < 10) {
        out.pass = false;
        out.detail = "only " + std::to_string(min_matched) + " spare coefficients matched";
    }
    if (out.pass) out.detail = "min spare matched coefficients: " + std::to_string(min_matched);
    return out;
}

CheckResult suite_hodge() {
    CheckResult out{"hodge-series", true, ""};

    Series f0 = f0_series(13);
    for (long k = 1; k <= 6 && out.pass; ++k) {
        Series ak = a_series(k, 13);
        for (long l = 0; l <= 6; ++l) {
            if (!equal_on_common_window(c_series(k, l, 13) * f0, ak * b_series(l, 13))) {
                out.pass = false;
                out.detail = "pairing series (" + std::to_string(k) + "," + std::to_string(l) +
                             ") fails against a*b";
                break;
            }
        }
    }
    if (!out.pass) return out;

    for (const CheckResult& c : inversion_identities(6, 14)) {
        if (!c.pass) {
            out.pass = false;
            out.detail = c.name + ": " + c.detail;
            return out;
        }
    }

    // factorization through one-variable slices, r <= 3, to (u^10, z^4)
    {
        const int u_order = 11, z_order = 4;
        Series f1 = f_series(1, 1, u_order, z_order);
        Series s1 = s_function(1, SConvention::sin, u_order);
        for (int r = 2; r <= 3; ++r) {
            Series fr = f_series(r, 1, u_order, z_order);
            Series factor = pow(s1, 2L * r - 2);
            std::vector<int> cur(static_cast<size_t>(r), 0);
            while (true) {
                int total = 0;
                for (int e : cur) total += e;
                if (total <= z_order) {
                    Series expected = factor;
                    for (int e : cur) expected = expected * f1.s_slice({e});
                    if (!equal_on_common_window(fr.s_slice(cur), expected)) {
                        out.pass = false;
                        out.detail = "factorization fails at r=" + std::to_string(r);
                        return out;
                    }
                }
                int pos = r - 1;
                while (pos >= 0 && cur[static_cast<size_t>(pos)] == z_order) {
                    cur[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++cur[static_cast<size_t>(pos)];
            }
        }

        // stationary cross-check: u^2 z coefficient against the closed formula
        SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
        InvariantSpec spec;
        spec.genus = 1;
        spec.beta = CurveClass{{1}};
        spec.div_descendents = {{1, 1}};
        Scalar expect(reduced_invariant(a1, spec).value);
        if (f1.at(2, {1}) != expect || f1.at(2, {1}) != Scalar(rat(-1, 12))) {
            out.pass = false;
            out.detail = "u^2 z coefficient disagrees with the descendent formula";
            return out;
        }
    }

    for (long m = 2; m <= 8; ++m)
        for (long a = 1; a < m; ++a) {
            auto [lhs, rhs] = tree_sum_identity(m, a);
            if (lhs != rhs) {
                out.pass = false;
                out.detail = "tree sum (" + std::to_string(m) + "," + std::to_string(a) + ")";
                return out;
            }
        }
    return out;
}

CheckResult suite_removal_relation() {
    CheckResult out{"removal-relation", true, ""};
    ConventionReport report = resolve_convention();
    std::vector<BracketTarget> grid = removal_grid();

    if (report.residual_free) {
        RemovalSolver solver(report.best);
        for (const BracketTarget& t : grid) {
            if (solver.solve(t) != closed_form_value(t)) {
                out.pass = false;
                out.detail = "residual-free convention found but its solver disagrees";
                return out;
            }
        }
        out.detail = "residual-free convention found; solver reproduces the closed form on " +
                     std::to_string(grid.size()) + " targets";
        return out;
    }

    // counterexample branch: the printed relation fails; report the documented
    // minimal instance and verify the amended relation instead
    const ResidualEntry* documented = nullptr;
    for (const ResidualEntry& e : report.paper_literal_failures)
        if (e.a == 0 && e.rest.genus == 1 && e.residual == rat(-1, 12)) {
            documented = &e;
            break;
        }
    if (documented == nullptr) {
        out.pass = false;
        out.detail = "no residual-free convention and the expected minimal counterexample is missing";
        return out;
    }

    RemovalSolver solver = RemovalSolver::amended();
    for (const BracketTarget& t : grid) {
        if (solver.solve(t) != closed_form_value(t)) {
            out.pass = false;
            out.detail = "amended relation solver disagrees with the closed form";
            return out;
        }
    }

    std::ostringstream detail;
    detail << "no residual-free convention among " << report.conventions_tested
           << " (best leaves " << report.nonzero_residuals << "/" << report.grid_size
           << " nonzero); minimal counterexample: removing tau_1(1) at a=0 from the genus-1 "
              "stationary target leaves residual "
           << q_str(documented->residual)
           << "; amended relation (first line rescaled by the left bracket) is residual-free and "
              "reproduces the closed form on "
           << grid.size() << " targets";
    out.detail = detail.str();
    return out;
}

CheckResult suite_exclusions() {
    return CheckResult{"exclusions", true,
                       "out of scope by design: moduli-space integrals, the generation "
                       "conjecture, and Hilbert-scheme quantum products; their consequences are "
                       "covered by the identity suites only"};
}

std::vector<CheckResult> run_identity_suites(const SuiteOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(suite_closed_formula(opts));
    out.push_back(suite_hurwitz_oracles());
    out.push_back(suite_one_part());
    out.push_back(suite_stationary_double());
    out.push_back(suite_localization());
    out.push_back(suite_rubber_theta());
    out.push_back(suite_q_rationality());
    out.push_back(suite_hodge());
    out.push_back(suite_removal_relation());
    out.push_back(suite_exclusions());
    return out;
}

} // namespace gwkit
