#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwkit/hurwitz.hpp"

#include <stdexcept>

using namespace gwkit;

namespace {
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }
Partition pt(std::vector<long> p) { return Partition::make(std::move(p)); }

HurwitzQuery hq(std::vector<long> rho, std::vector<long> lambda, long g) {
    Partition r = pt(std::move(rho));
    return HurwitzQuery{r.size(), r, pt(std::move(lambda)), g};
}
} // namespace

TEST_CASE("brute-force oracle ground values") {
    CHECK(hurwitz_enumerate(hq({1}, {1}, 0)) == rat(1));
    CHECK(hurwitz_enumerate(hq({2}, {2}, 0)) == rat(1, 2));
    CHECK(hurwitz_enumerate(hq({3}, {3}, 0)) == rat(1, 3));
    CHECK(hurwitz_enumerate(hq({2}, {2}, 1)) == rat(1, 2));
    CHECK(hurwitz_enumerate(hq({2}, {2}, 2)) == rat(1, 2));
    // tuple-count normalization: the only cover contributes 1/m!
    CHECK(hurwitz_enumerate(hq({1, 1}, {2}, 0)) == rat(1, 2));
    CHECK(hurwitz_enumerate(hq({1, 1, 1}, {3}, 0)) == rat(1));
    CHECK(hurwitz_enumerate(hq({2, 1}, {3}, 0)) == rat(1));
    CHECK(hurwitz_enumerate(hq({2, 1}, {3}, 1)) == rat(9));
    CHECK(hurwitz_enumerate(hq({3}, {3}, 1)) == rat(2));
    // higher genus with no room for transpositions on one sheet
    CHECK(hurwitz_enumerate(hq({1}, {1}, 1)) == rat(0));
}

TEST_CASE("class algebra oracle matches on its examples") {
    CHECK(hurwitz_class_algebra(hq({2}, {2}, 1)) == rat(1, 2));
    CHECK(hurwitz_class_algebra(hq({2}, {2}, 2)) == rat(1, 2));
    CHECK(hurwitz_class_algebra(hq({1, 1}, {2}, 0)) == rat(1, 2));
    CHECK(hurwitz_class_algebra(hq({1, 1, 1}, {3}, 1)) == rat(9));
}

TEST_CASE("dual-oracle equality on the full small grid") {
    for (long m = 1; m <= 3; ++m) {
        auto parts = partitions_of(m);
        for (const auto& rho : parts)
            for (const auto& lambda : parts)
                for (long g = 0; g <= 3; ++g) {
                    HurwitzQuery q{m, rho, lambda, g};
                    if (q.branch_count() > 6) continue;
                    CHECK(hurwitz_enumerate(q) == hurwitz_class_algebra(q));
                }
    }
    // spot checks at m = 4
    auto parts4 = partitions_of(4);
    for (const auto& rho : parts4)
        for (const auto& lambda : parts4)
            for (long g = 0; g <= 1; ++g) {
                HurwitzQuery q{4, rho, lambda, g};
                if (q.branch_count() > 6) continue;
                CHECK(hurwitz_enumerate(q) == hurwitz_class_algebra(q));
            }
}

TEST_CASE("counts are nonnegative with denominator dividing m factorial") {
    for (long m = 1; m <= 4; ++m) {
        auto parts = partitions_of(m);
        for (const auto& rho : parts)
            for (const auto& lambda : parts)
                for (long g = 0; g <= 2; ++g) {
                    mpq_class h = hurwitz_class_algebra(HurwitzQuery{m, rho, lambda, g});
                    CHECK(h >= 0);
                    CHECK(factorial(m) % h.get_den() == 0);
                }
    }
}

TEST_CASE("tractability guards") {
    CHECK_THROWS_AS(hurwitz_enumerate(hq({1, 1, 1, 1}, {1, 1, 1, 1}, 1)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_enumerate(hq({9}, {9}, 0)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_class_algebra(hq({9}, {9}, 0)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_class_algebra(hq({2}, {2}, 6)), std::domain_error);
    CHECK_THROWS_AS(hurwitz_enumerate(HurwitzQuery{3, pt({2}), pt({3}), 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_class_algebra(HurwitzQuery{2, pt({2}), pt({2}), -1}),
                    std::invalid_argument);
    // within guard: m = 4 with few branch points is fine
    CHECK(hurwitz_enumerate(hq({4}, {4}, 0)) == hurwitz_class_algebra(hq({4}, {4}, 0)));
}

TEST_CASE("one-part closed form values") {
    Series cos_half = one_part_series(pt({2}), 8);
    CHECK(cos_half.at(0) == sc(1));
    CHECK(cos_half.at(1) == sc(0));
    CHECK(cos_half.at(2) == sc(-1, 8));
    CHECK(cos_half.at(4) == sc(1, 384));

    Series unit = one_part_series(pt({1}), 8);
    CHECK(unit.at(0) == sc(1));
    CHECK(unit.at(2) == sc(0));

    CHECK(equal_on_common_window(one_part_series(pt({1, 1}), 10),
                                 s_function(1, SConvention::sin, 10)));

    Series triple = one_part_series(pt({3}), 8);
    CHECK(triple.at(2) == sc(-1, 3));
    CHECK(triple.at(4) == sc(1, 36));
}

TEST_CASE("signed series carries the labeled-cover normalization") {
    Series s = signed_hurwitz_series(pt({1, 1}), pt({2}), 6);
    CHECK(s.at(0) == sc(1));    // 2 labelings of the unramified pair
    CHECK(s.at(2) == sc(-1, 24));
    Series deep = signed_hurwitz_series(pt({2}), pt({2}), 40);
    CHECK(deep.u_hi == 12); // genus guard narrows the window
    CHECK(deep.at(10) == sc(-1, 3715891200));
}

TEST_CASE("signed series equals the one-part closed form") {
    for (long m = 1; m <= 5; ++m) {
        Partition one_part = pt({m});
        for (const auto& rho : partitions_of(m))
            CHECK(equal_on_common_window(signed_hurwitz_series(rho, one_part, 8),
                                         one_part_series(rho, 8)));
    }
}

TEST_CASE("stationary series of the projective line") {
    Series diag = stationary_p1_series(pt({1}), pt({1}), 10);
    CHECK(equal_on_common_window(diag, s_function(1, SConvention::sin, 10)));
    CHECK(diag.at(2) == sc(-1, 24)); // <tau_2(omega)>_{1,1} = 1/24 after the sign twist

    Series mixed = stationary_p1_series(pt({2}), pt({1, 1}), 10);
    Series expect = s_function(2, SConvention::sin, 10) * s_function(1, SConvention::sin, 10) *
                    sc(1, 2);
    CHECK(equal_on_common_window(mixed, expect));

    for (long m = 1; m <= 4; ++m)
        CHECK(stationary_p1_series(pt({m}), pt({m}), 10).at(0) == sc(1));

    CHECK_THROWS_AS(stationary_p1_series(pt({2}), pt({3}), 8), std::invalid_argument);
}

TEST_CASE("stationary construction is symmetric and self-consistent") {
    for (long m = 1; m <= 4; ++m) {
        auto parts = partitions_of(m);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Series a = stationary_p1_series(mu, nu, 10); // throws on internal mismatch
                Series b = stationary_p1_series(nu, mu, 10);
                CHECK(equal_on_common_window(a, b));
            }
    }
}
