#include <gtest/gtest.h>

#include "optdeg/error.hpp"
#include "optdeg/formulary.hpp"

using namespace optdeg;

TEST(PolarFormula, Examples) {
    EXPECT_EQ(polar_formula(2, {2, 2}, 3), 4);
    EXPECT_EQ(polar_formula(1, {7, 9}, 3), 0);
    EXPECT_EQ(polar_formula(3, {4, 3, 0}, 4), 20);
    EXPECT_EQ(polar_formula(3, {4, 3, 0}, 4), (3 - 1) * (3 * 3 + 1));
    try {
        polar_formula(2, {1, 2, 3}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::length_mismatch);
    }
}

TEST(ChernFormula, Examples) {
    for (std::int64_t d = 1; d <= 6; ++d)
        for (std::int64_t genus = 0; genus <= 4; ++genus)
            for (std::int64_t p = 1; p <= 6; ++p)
                EXPECT_EQ(chern_formula(p, {{d, 2 - 2 * genus}}), curve_formula(d, genus, p));
    EXPECT_EQ(chern_formula(2, {{3, 2}}), 7);
    EXPECT_EQ(chern_formula(1, {{5, -3, 4}}), 0);
}

TEST(PolarFromChern, Examples) {
    for (std::int64_t d = 1; d <= 6; ++d)
        EXPECT_EQ(polar_from_chern({{d, d * (3 - d)}}, 3), (std::vector<std::int64_t>{d * (d - 1), d}));
    EXPECT_EQ(polar_from_chern({{3, 2}}, 4), (std::vector<std::int64_t>{4, 3, 0}));
    // A point: only delta_0 survives, and the polar formula collapses to (p-1)^(n-1) * 1.
    auto point = polar_from_chern({{1}}, 3);
    EXPECT_EQ(point, (std::vector<std::int64_t>{1, 0}));
    EXPECT_EQ(polar_formula(3, point, 3), 2);
}

TEST(HypersurfaceFormula, Examples) {
    EXPECT_EQ(hypersurface_formula(2, 3, 3), 12);
    EXPECT_EQ(hypersurface_formula(3, 3, 2), 9);
    EXPECT_EQ(hypersurface_formula(2, 4, 2), 6);
    EXPECT_EQ(hypersurface_formula(2, 4, 2), segre_p1_formula(2, 2));
}

TEST(CiBound, Examples) {
    EXPECT_EQ(ci_bound({2}, 2, 3), 6);
    EXPECT_EQ(ci_bound({2}, 2, 2), 4);
    EXPECT_EQ(ci_bound({3}, 2, 2), 9);
    for (int n = 2; n <= 6; ++n)
        for (std::int64_t p = 1; p <= 5; ++p) {
            std::int64_t expected = 1;
            for (int i = 0; i < n - 2; ++i) expected *= p - 1;
            EXPECT_EQ(ci_bound({1, 1}, n, p), expected);
        }
}

TEST(CiBound, HypersurfaceClosedForm) {
    for (std::int64_t d = 1; d <= 6; ++d)
        for (int n = 1; n <= 6; ++n)
            for (std::int64_t p = 1; p <= 6; ++p) {
                std::int64_t a = 1, b = 1;
                for (int i = 0; i < n; ++i) {
                    a *= d - 1;
                    b *= p - 1;
                }
                if (d != p) {
                    EXPECT_EQ(ci_bound({d}, n, p), d * (a - b) / (d - p));
                } else {
                    std::int64_t limit = n;
                    for (int i = 0; i < n - 1; ++i) limit *= d - 1;
                    EXPECT_EQ(ci_bound({d}, n, p), d * limit);
                }
            }
}

TEST(ToricFormula, Examples) {
    for (std::int64_t d = 1; d <= 6; ++d)
        for (std::int64_t p = 1; p <= 6; ++p) {
            EXPECT_EQ(toric_formula(p, {{2, d}}), (p - 1) * ((p + 1) * d - 2));
            EXPECT_EQ(toric_formula(p, {{2, d}}), euler_formula(EulerMode::projective, p, 1, rational_normal_curve_chi(d, p)));
        }
    EXPECT_EQ(toric_formula(2, {{4, 4, 2}}), 6);
    for (std::int64_t p = 1; p <= 6; ++p)
        EXPECT_EQ(toric_formula(p, {{4, 4, 2}}), segre_veronese_formula(p, {{{2, 1}, {2, 1}}}));
    EXPECT_EQ(toric_formula(1, {{4, 4, 2}}), 0);
}

TEST(SegreVeronese, Examples) {
    EXPECT_EQ(segre_veronese_formula(2, {{{2, 1}, {2, 1}}}), 6);
    for (std::int64_t p = 1; p <= 6; ++p) EXPECT_EQ(segre_veronese_formula(p, {{{2, 2}}}), 2 * p * (p - 1));
    EXPECT_EQ(segre_veronese_formula(3, {{{2, 1}, {3, 1}}}), 92);
    EXPECT_EQ(segre_p1_formula(3, 3), 92);
    EXPECT_EQ(segre_veronese_chern({{{2, 1}, {2, 1}}}).degs, (std::vector<std::int64_t>{2, 4, 4}));
}

TEST(SegreVeronese, MatchesVeroneseAndSegreClosedForms) {
    for (int n = 2; n <= 5; ++n)
        for (int w = 1; w <= 4; ++w)
            for (std::int64_t p = 2; p <= 4; ++p)
                EXPECT_EQ(segre_veronese_formula(p, {{{n, w}}}), veronese_formula(n, w, p)) << n << " " << w << " " << p;
    for (int n = 2; n <= 5; ++n)
        for (std::int64_t p = 1; p <= 5; ++p) EXPECT_EQ(segre_veronese_formula(p, {{{2, 1}, {n, 1}}}), segre_p1_formula(n, p));
}

TEST(EulerFormula, Examples) {
    for (std::int64_t d = 1; d <= 6; ++d)
        for (std::int64_t p = 1; p <= 6; ++p)
            EXPECT_EQ(euler_formula(EulerMode::projective, p, 1, plane_curve_chi(d, p)), d * (p - 1) * (d + p - 2));
    EXPECT_EQ(euler_formula(EulerMode::projective, 3, 2, 0), 0);
    EXPECT_EQ(euler_formula(EulerMode::affine, 3, 1, -5), 5);
    EXPECT_EQ(plane_curve_affine_formula(3, 4), 15);
}

TEST(Coherence, HypersurfaceRoutesAgree) {
    for (std::int64_t d = 1; d <= 6; ++d)
        for (int n = 2; n <= 6; ++n)
            for (std::int64_t p = 1; p <= 6; ++p) {
                const auto chern = hypersurface_chern(d, n);
                const auto direct = hypersurface_formula(d, n, p);
                EXPECT_EQ(chern_formula(p, chern), direct) << d << " " << n << " " << p;
                EXPECT_EQ(polar_formula(p, polar_from_chern(chern, n), n), direct) << d << " " << n << " " << p;
                EXPECT_GE(direct, 0);
            }
}

TEST(Formulary, Errors) {
    EXPECT_THROW(chern_formula(0, {{1}}), Error);
    EXPECT_THROW(ci_bound({2, 2, 2}, 2, 2), Error);
    EXPECT_THROW(toric_formula(2, {{1, 0}}), Error);
    EXPECT_THROW(segre_veronese_chern({{{0, 1}}}), Error);
    EXPECT_THROW(hypersurface_formula(1000000, 6, 2), Error);
}
