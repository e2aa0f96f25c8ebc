#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/root_system.hpp"

using namespace gwkit;

namespace {
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }
}

TEST_CASE("positive root enumeration") {
    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    std::vector<std::vector<long>> expect = {{0, 1}, {1, 0}, {1, 1}};
    CHECK(a2.positive_roots == expect);

    for (int n = 1; n <= 6; ++n)
        CHECK(build_surface(SurfaceKind::A, n).positive_roots.size() == size_t(n * (n + 1) / 2));
    CHECK(build_surface(SurfaceKind::D, 4).positive_roots.size() == 12);
    CHECK(build_surface(SurfaceKind::D, 5).positive_roots.size() == 20);
    CHECK(build_surface(SurfaceKind::E, 6).positive_roots.size() == 36);
    CHECK(build_surface(SurfaceKind::E, 7).positive_roots.size() == 63);
    CHECK(build_surface(SurfaceKind::E, 8).positive_roots.size() == 120);
    CHECK_THROWS_AS(build_surface(SurfaceKind::E, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(SurfaceKind::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(SurfaceKind::A, 0), std::invalid_argument);
}

TEST_CASE("every root has self-intersection -2") {
    for (SurfaceModel s : {build_surface(SurfaceKind::A, 3), build_surface(SurfaceKind::D, 4),
                           build_surface(SurfaceKind::E, 6)}) {
        for (const auto& r : s.positive_roots)
            CHECK(intersection(s, CurveClass{r}, CurveClass{r}) == sc(-2));
    }
}

TEST_CASE("intersection pairing") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    CHECK(intersection(a1, CurveClass{{1}}, CurveClass{{1}}) == sc(-2));

    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    CurveClass a13 = chain_root(a2, 1, 3);
    CHECK(a13.e == std::vector<long>{1, 1});
    CHECK(intersection(a2, a13, CohClass::omega_basis(1, 2)) == sc(1));
    CHECK(intersection(a2, a13, CohClass::omega_basis(2, 2)) == sc(1));
    CHECK(intersection(a2, chain_root(a2, 2, 3), CohClass::omega_basis(1, 2)) == sc(0));

    // omega gram = -C^{-1}: for A1, (omega, omega) = -1/2
    CHECK(intersection(a1, CohClass::omega_basis(1, 1), CohClass::omega_basis(1, 1)) == sc(-1, 2));

    CHECK_THROWS_AS(intersection(a1, CohClass::identity(1), CohClass::omega_basis(1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(chain_root(a2, 2, 2), std::invalid_argument);

    // duality omega_i . E_j = delta_ij
    SurfaceModel a3 = build_surface(SurfaceKind::A, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            CurveClass ej = chain_root(a3, j, j + 1);
            CHECK(intersection(a3, ej, CohClass::omega_basis(i, 3)) == sc(i == j ? 1 : 0));
        }
}

TEST_CASE("root multiple detection") {
    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    CHECK(!is_root_multiple(a2, CurveClass{{1, 2}}).has_value());
    auto m = is_root_multiple(a2, CurveClass{{2, 2}});
    REQUIRE(m.has_value());
    CHECK(m->first.e == std::vector<long>{1, 1});
    CHECK(m->second == 2);
    CHECK(!is_root_multiple(a2, CurveClass{{0, 0}}).has_value());
    CHECK(!is_root_multiple(a2, CurveClass{{-1, 0}}).has_value());
    auto e2 = is_root_multiple(build_surface(SurfaceKind::A, 3), CurveClass{{0, 1, 0}});
    REQUIRE(e2.has_value());
    CHECK(e2->second == 1);

    // exhaustive box scan stays consistent with divisibility on A2
    for (long x = 0; x <= 20; ++x)
        for (long y = 0; y <= 20; ++y) {
            auto r = is_root_multiple(a2, CurveClass{{x, y}});
            bool expected = (x == 0 && y > 0) || (y == 0 && x > 0) || (x == y && x > 0);
            CHECK(r.has_value() == expected);
        }
}

TEST_CASE("fixed point weights") {
    for (int n = 1; n <= 6; ++n) {
        SurfaceModel s = build_surface(SurfaceKind::A, n);
        REQUIRE(s.fixed_points.size() == size_t(n + 1));
        // weight along E_i at p_i is minus the weight along E_i at p_{i+1}
        for (int i = 1; i <= n; ++i)
            CHECK(s.fixed_points[i - 1].second == -s.fixed_points[i].first);
    }
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    CHECK(a1.fixed_points[0].first == Poly2::t1() * GaussRat(2));
    CHECK(a1.fixed_points[0].second == Poly2::t2() - Poly2::t1());
    CHECK(a1.fixed_points[1].second == Poly2::t2() * GaussRat(2));
}

TEST_CASE("equivariant pairing by fixed-point sums") {
    SurfaceModel a1 = build_surface(SurfaceKind::A, 1);
    Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    CohClass one = CohClass::identity(1);
    CohClass w = CohClass::omega_basis(1, 1);
    CHECK(equivariant_pairing(a1, one, one) == Scalar(1) / (sc(2) * t1 * t2));
    CHECK(equivariant_pairing(a1, one, divisor_class(a1, CurveClass{{1}})) == sc(0));
    CHECK(equivariant_pairing(a1, w, w) == sc(-1, 2));

    // divisor-divisor entries of the equivariant gram equal -C^{-1}
    for (int n = 1; n <= 6; ++n) {
        SurfaceModel s = build_surface(SurfaceKind::A, n);
        for (int i = 1; i <= n; ++i) {
            CHECK(equivariant_pairing(s, CohClass::identity(n),
                                      divisor_class(s, chain_root(s, i, i + 1))) == sc(0));
            for (int j = i; j <= n; ++j) {
                Scalar expect(mpq_class(-s.cartan_inv[i - 1][j - 1]));
                CHECK(equivariant_pairing(s, CohClass::omega_basis(i, n),
                                          CohClass::omega_basis(j, n)) == expect);
            }
        }
    }
    CHECK_THROWS_AS(equivariant_pairing(build_surface(SurfaceKind::D, 4), CohClass::identity(4),
                                        CohClass::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("class to s-monomial") {
    SurfaceModel a2 = build_surface(SurfaceKind::A, 2);
    CurveClass a13 = chain_root(a2, 1, 3);
    CurveClass d2{{2, 2}};
    CHECK(s_monomial(a13) == std::vector<int>{1, 1});
    CHECK(s_monomial(d2) == std::vector<int>{2, 2});
    CHECK(s_monomial(CurveClass{{0, 1, 0}}) == std::vector<int>{0, 1, 0});
    CHECK(s_monomial(CurveClass{{0, 0}}) == std::vector<int>{0, 0});
    CHECK_THROWS_AS(s_monomial(CurveClass{{-1, 0}}), std::domain_error);
}
