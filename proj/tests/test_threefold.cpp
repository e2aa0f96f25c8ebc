#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/threefold.hpp"

#include <stdexcept>
#include <vector>

using namespace gwkit;

namespace {

Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }

Scalar fw() { return Scalar::t1() + Scalar::t2(); }

WeightedPartition wp(std::vector<WeightedPart> parts) {
    return WeightedPartition::make(std::move(parts));
}

RubberSpec spec_a1(long d, WeightedPartition mu, WeightedPartition nu) {
    RubberSpec r;
    r.surface = build_surface(SurfaceKind::A, 1);
    r.root = CurveClass{{1}};
    r.d = d;
    r.mu = std::move(mu);
    r.nu = std::move(nu);
    return r;
}

} // namespace

TEST_CASE("rubber series closed forms") {
    for (long d = 1; d <= 4; ++d) {
        Series r = rubber_series(spec_a1(d, wp({{1, 1}}), wp({{1, 1}})), 12);
        CHECK(r.at(0) == fw() * sc(1, d));
        CHECK(r.at(2) == Scalar());
        CHECK(r.at(10) == Scalar());
    }

    for (long d = 1; d <= 3; ++d) {
        Series r = rubber_series(spec_a1(d, wp({{2, 1}}), wp({{1, 1}, {1, 1}})), 14);
        Series expect = s_function(static_cast<int>(2 * d), SConvention::sin, 14) *
                        (fw() * sc(1, 2));
        CHECK(equal_on_common_window(r, expect));
    }

    // Identity labels pair to zero with every root.
    CHECK(rubber_series(spec_a1(1, wp({{1, 0}}), wp({{1, 1}})), 8).is_zero());

    // Non-root curve classes contribute nothing.
    RubberSpec bad;
    bad.surface = build_surface(SurfaceKind::A, 2);
    bad.root = CurveClass{{1, 2}};
    bad.mu = wp({{1, 2}});
    bad.nu = wp({{1, 2}});
    CHECK(rubber_series(bad, 8).is_zero());

    // A multiple-of-root input lands on the same series as the root at scaled d.
    RubberSpec doubled;
    doubled.surface = build_surface(SurfaceKind::A, 2);
    doubled.root = CurveClass{{2, 0}};
    doubled.d = 1;
    doubled.mu = wp({{1, 1}});
    doubled.nu = wp({{1, 1}});
    RubberSpec plain;
    plain.surface = build_surface(SurfaceKind::A, 2);
    plain.root = CurveClass{{1, 0}};
    plain.d = 2;
    plain.mu = wp({{1, 1}});
    plain.nu = wp({{1, 1}});
    Series lhs = rubber_series(doubled, 10);
    Series rhs = rubber_series(plain, 10);
    CHECK(equal_on_common_window(lhs, rhs));
    CHECK(lhs.at(0) == rhs.at(0));

    // Root orthogonal to every boundary label.
    RubberSpec ortho;
    ortho.surface = build_surface(SurfaceKind::A, 2);
    ortho.root = CurveClass{{0, 1}};
    ortho.mu = wp({{1, 1}});
    ortho.nu = wp({{1, 1}});
    CHECK(rubber_series(ortho, 8).is_zero());

    CHECK_THROWS_AS(rubber_series(spec_a1(0, wp({{1, 1}}), wp({{1, 1}})), 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(rubber_series(spec_a1(1, wp({{2, 1}}), wp({{1, 1}})), 8),
                    std::invalid_argument);
}

TEST_CASE("rubber degree dependence is a pure rescaling") {
    const std::vector<std::pair<WeightedPartition, WeightedPartition>> cases = {
        {wp({{1, 1}}), wp({{1, 1}})},
        {wp({{2, 1}}), wp({{1, 1}, {1, 1}})},
        {wp({{3, 1}}), wp({{2, 1}, {1, 1}})},
    };
    for (const auto& [mu, nu] : cases) {
        const long ell = mu.length() + nu.length();
        Series base = rubber_series(spec_a1(1, mu, nu), 12);
        for (long d = 1; d <= 5; ++d) {
            Series expect = u_rescale(base, static_cast<int>(d)) *
                            Scalar(pow_rat(mpq_class(d), ell - 3));
            Series got = rubber_series(spec_a1(d, mu, nu), 12);
            CHECK(equal_on_common_window(got, expect));
        }
    }
}

TEST_CASE("connected theta on short chains") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    Series t = theta_connected(a1, wp({{1, 1}}), wp({{1, 1}}), 12, 4);
    CHECK(t.u_lo == 0);
    CHECK(t.s_cap == 4);
    for (int d = 1; d <= 4; ++d) {
        CHECK(t.at(0, {d}) == fw() * sc(1, d));
        CHECK(t.at(2, {d}) == Scalar());
    }
    CHECK(t.s_support().size() == 4);

    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    Series t2 = theta_connected(a2, wp({{1, 2}}), wp({{1, 2}}), 12, 4);
    for (int d = 1; d <= 4; ++d) {
        CHECK(t2.at(0, {0, d}) == fw() * sc(1, d));
        if (2 * d <= 4) CHECK(t2.at(0, {d, d}) == fw() * sc(1, d));
        CHECK(t2.at(0, {d, 0}) == Scalar());
    }

    // Identity labels kill every root contribution.
    CHECK(theta_connected(a1, wp({{1, 0}}), wp({{1, 0}}), 12, 4).is_zero());

    // Symmetric in the two boundaries.
    Series ab = theta_connected(a1, wp({{2, 1}}), wp({{1, 1}, {1, 1}}), 14, 3);
    Series ba = theta_connected(a1, wp({{1, 1}, {1, 1}}), wp({{2, 1}}), 14, 3);
    CHECK(equal_on_common_window(ab, ba));
    CHECK(!ab.is_zero());
}

TEST_CASE("disconnected theta assembles the subpartition sum") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int order = 12, cap = 3;

    Series full = theta_disconnected(a1, wp({{1, 1}}), wp({{1, 1}}), order, cap);
    CHECK(full.u_lo == -2);
    CHECK(full.at(-2, {1}) == -(fw() * sc(1, 2)));
    CHECK(full.at(0, {1}) == fw() * sc(23, 24));
    CHECK(full.at(-2, {2}) == -(fw() * sc(1, 16)));
    CHECK(full.at(0, {2}) == fw() * sc(23, 48));

    Series direct = theta_connected(a1, wp({{1, 1}}), wp({{1, 1}}), order, cap);
    Series empty = theta_connected(a1, wp({}), wp({}), order, cap);
    CHECK(equal_on_common_window(full, direct + empty * sc(-1, 2)));

    // No common part: the subpartition sum collapses to the connected term.
    Series uneven = theta_disconnected(a1, wp({{2, 1}}), wp({{1, 1}, {1, 1}}), order, cap);
    Series uneven_conn = theta_connected(a1, wp({{2, 1}}), wp({{1, 1}, {1, 1}}), order, cap);
    CHECK(equal_on_common_window(uneven, uneven_conn));

    // Single part of size two: strip weight is -<(2,w)|(2,w)> = 1/4.
    Series two = theta_disconnected(a1, wp({{2, 1}}), wp({{2, 1}}), order, cap);
    Series two_conn = theta_connected(a1, wp({{2, 1}}), wp({{2, 1}}), order, cap);
    CHECK(equal_on_common_window(two, two_conn + empty * sc(1, 4)));

    // Boundary symmetry survives the disconnected sum.
    Series sym = theta_disconnected(a1, wp({{1, 1}, {1, 1}}), wp({{2, 1}}), order, cap);
    CHECK(equal_on_common_window(sym, uneven));
}

TEST_CASE("theta coefficients are fiber-weight multiples") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    const Scalar weight = fw();
    const Series cases[] = {
        theta_disconnected(a1, wp({{1, 1}, {1, 1}}), wp({{1, 1}, {1, 1}}), 10, 3),
        theta_disconnected(a2, wp({{1, 1}, {1, 2}}), wp({{1, 1}, {1, 2}}), 10, 3),
        theta_connected(a1, wp({{2, 1}}), wp({{1, 1}, {1, 1}}), 10, 3),
    };
    for (const Series& t : cases) {
        CHECK(!t.is_zero());
        for (const auto& [key, c] : t.coef) {
            const Scalar reduced = c / weight;
            CHECK(reduced.is_constant());
        }
    }
}

TEST_CASE("intermediate strips stay away from the deepest pole") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int order = 10, cap = 3;
    const WeightedPartition mu = wp({{1, 1}, {1, 1}});
    Series full = theta_disconnected(a1, mu, mu, order, cap);
    Series head = theta_connected(a1, mu, mu, order, cap);
    Series empty = theta_connected(a1, wp({}), wp({}), order, cap);
    // Full strip weight: sign +1, <(1,w)^2|(1,w)^2> = 1/8.
    Series middle = full - head - empty * sc(1, 8);
    middle.tighten();
    CHECK(middle.u_lo >= 0);
    CHECK(!middle.is_zero());
}

TEST_CASE("divisor partition functions in the nonzero sectors") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int order = 16, cap = 3;

    // (1,omega) insertion at m = 1.
    Series zq = divisor_partition_function(a1, wp({{1, 1}}), wp({{1, 1}}),
                                           divisor_operator(1, 1), order, cap);
    CHECK(zq.at(-4, {1}) == -(fw() * sc(1, 2)));
    CHECK(zq.at(-2, {1}) == fw() * sc(23, 24));
    CHECK(zq.at(0, {1}) == -(fw() * sc(1, 480)));
    CHECK(zq.at(-4, {2}) == -(fw() * sc(1, 8)));
    CHECK(zq.at(-2, {2}) == fw() * sc(23, 24));
    CHECK(zq.at(0, {2}) == -(fw() * sc(1, 120)));

    // (2) insertion at m = 2 on a single part.
    Series z2 = divisor_partition_function(a1, wp({{2, 1}}), wp({{2, 1}}),
                                           double_point_operator(2), order, cap);
    CHECK(z2.at(-4, {1}) == -(fw() * sc(1, 2)));
    CHECK(z2.at(-2, {1}) == Scalar());
    CHECK(z2.at(0, {1}) == -(fw() * sc(239, 480)));
    CHECK(z2.at(2, {1}) == fw() * sc(505, 6048));

    // Identity insertion: the nonzero-degree sector vanishes identically.
    Series zid = divisor_partition_function(a1, wp({{2, 1}}), wp({{2, 1}}),
                                            identity_operator(2), order, cap);
    CHECK(zid.is_zero());

    // Symmetric in the boundaries.
    Series zs = divisor_partition_function(a1, wp({{2, 1}}), wp({{1, 1}, {1, 1}}),
                                           double_point_operator(2), order, cap);
    Series zs2 = divisor_partition_function(a1, wp({{1, 1}, {1, 1}}), wp({{2, 1}}),
                                            double_point_operator(2), order, cap);
    CHECK(equal_on_common_window(zs, zs2));

    CHECK_THROWS_AS(divisor_partition_function(a1, wp({{1, 1}}), wp({{2, 1}}),
                                               divisor_operator(1, 1), order, cap),
                    std::invalid_argument);
    CHECK_THROWS_AS(divisor_partition_function(a1, wp({{2, 1}}), wp({{2, 1}}),
                                               divisor_operator(1, 1), order, cap),
                    std::invalid_argument);
    CHECK_THROWS_AS(divisor_partition_function(a1, wp({{3, 1}}), wp({{3, 1}}),
                                               wp({{3, 0}}), order, cap),
                    std::invalid_argument);
    CHECK_THROWS_AS(double_point_operator(1), std::invalid_argument);
}

TEST_CASE("ring structure constants") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    const int order = 16, cap = 3;

    // Identity insertion multiplies by the Poincare pairing.
    Series rid = ring_structure_constant(a1, wp({{1, 1}}), wp({{1, 1}}),
                                         identity_operator(1), order, cap);
    CHECK(rid.at(0, {0}) == sc(-1, 2));
    CHECK(rid.coef.size() == 1);

    // Divisor insertion at m = 1: (-i)^2 u^2 Z'.
    Series rq = ring_structure_constant(a1, wp({{1, 1}}), wp({{1, 1}}),
                                        divisor_operator(1, 1), order, cap);
    CHECK(rq.at(-2, {1}) == fw() * sc(1, 2));
    CHECK(rq.at(0, {1}) == -(fw() * sc(23, 24)));
    CHECK(rq.at(2, {1}) == fw() * sc(1, 480));

    // Double point at m = 2: (-i) u Z'.
    Series r2 = ring_structure_constant(a1, wp({{2, 1}}), wp({{2, 1}}),
                                        double_point_operator(2), order, cap);
    const Scalar half_i = Scalar::i() * (fw() * sc(1, 2));
    CHECK(r2.at(-3, {1}) == half_i);
}

TEST_CASE("structure constants are rational in the exponentiated variable") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    Series rq = ring_structure_constant(a1, wp({{1, 1}}), wp({{1, 1}}),
                                        divisor_operator(1, 1), 40, 3);
    QRationalityReport report = q_rationality_check(rq, 12);
    CHECK(report.all_pass);
    CHECK(report.monomials.size() == 3);
    CHECK(report.min_matched >= 10);
    for (const auto& entry : report.monomials) {
        CHECK(!entry.fit.residual_flag);
        // Refit expansion must reproduce the slice on its window.
        Series slice = rq.s_slice(entry.monomial);
        Series refit = expand_fit(entry.fit, slice.u_lo, slice.u_hi);
        CHECK(equal_on_common_window(slice, refit));
    }
    // The first slice closes at denominator degree two.
    CHECK(report.monomials.front().degree_used == 2);

    Series r2 = ring_structure_constant(a1, wp({{2, 1}}), wp({{2, 1}}),
                                        double_point_operator(2), 44, 2);
    QRationalityReport report2 = q_rationality_check(r2, 16);
    CHECK(report2.all_pass);
    CHECK(report2.min_matched >= 10);
}
