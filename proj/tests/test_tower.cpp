#include <gtest/gtest.h>

#include "optdeg/tower.hpp"
#include "support.hpp"

using namespace optdeg;
using namespace optdeg::testing;

namespace {

struct Built {
    TowerSpec<Fq> tower;
    ParametrizationSpec<Fq> param;
};

Built build(const std::vector<std::string>& base, const std::vector<int>& degrees, const std::vector<std::string>& alphas,
            const std::vector<std::string>& coords, std::optional<TowerBranch> branch = std::nullopt) {
    auto r = tower_source_ring(Fq{}, base, degrees.size());
    std::vector<RationalFunction<Fq>> a;
    for (const auto& s : alphas) a.push_back(parse_rational_function<Fq>(s, r));
    ParametrizationSpec<Fq> pz;
    for (const auto& s : coords) pz.coords.push_back(parse_rational_function<Fq>(s, r));
    return {make_tower(r, base.size(), degrees, a, std::move(branch)), pz};
}

Built ellipse_tower(std::optional<TowerBranch> branch = std::nullopt) {
    return build({"x1", "x2", "s"}, {2, 2}, {"s*x1", "4*s*x2"}, {"x1", "x2", "x1+D1", "x2+D2"}, std::move(branch));
}

VarietySpec<Fq> over(const std::vector<std::string>& names, const std::string& g) {
    auto r = ring<Fq>(names);
    return VarietySpec<Fq>(r, {P(r, g)});
}

Built cardioid_tower() {
    // a = (1, 2), b = (2, -1), c = (3, 1).
    return build({"x1", "x2", "s"}, {2, 2},
                 {"4-12+4*s*(2*x1^3+2*x1*x2^2+3*x1^2+x2^2)", "1-8+8*s*x2*(2*x1^2+2*x2^2+2*x1-1)"},
                 {"x1", "x2", "(2*x1-2+D1)/2", "(4*x2+1+D2)/4"});
}

}  // namespace

TEST(BuildTowerSystem, Ellipse) {
    auto b = ellipse_tower();
    auto sys = build_tower_system(b.tower, b.param);
    EXPECT_EQ(formatted(sys.E), (std::vector<std::string>{"-x1*s+D1^2", "-4*x2*s+D2^2"}));
    EXPECT_EQ(formatted(sys.G), (std::vector<std::string>{"-x1+Y1", "-x2+Y2", "-x1-D1+Y3", "-x2-D2+Y4"}));
    EXPECT_EQ(format_polynomial(sys.GZ), "Z-1");
    EXPECT_EQ(sys.ring->names(),
              (std::vector<std::string>{"x1", "x2", "s", "D1", "D2", "Y1", "Y2", "Y3", "Y4", "Z"}));
}

TEST(BuildTowerSystem, DenominatorCleared) {
    auto b = build({"t"}, {3}, {"1/t"}, {"t", "D1"});
    auto sys = build_tower_system(b.tower, b.param);
    EXPECT_EQ(format_polynomial(sys.E[0]), "t*D1^3-1");
    EXPECT_EQ(format_polynomial(sys.GZ), "t*Z-1");
}

TEST(BuildTowerSystem, CardioidRelation) {
    auto b = cardioid_tower();
    auto sys = build_tower_system(b.tower, b.param);
    auto expected = P(sys.ring, "D1^2-(4-12+4*s*(2*x1^3+2*x1*x2^2+3*x1^2+x2^2))");
    EXPECT_EQ(sys.E[0], expected);
    // Constant denominators fold into the numerators, so no factor survives in G_Z.
    EXPECT_EQ(format_polynomial(sys.GZ), "Z-1");
}

TEST(MakeTower, Validation) {
    auto r = tower_source_ring(Fq{}, {"t"}, 2);
    auto rf = [&](const char* s) { return parse_rational_function<Fq>(s, r); };
    try {
        make_tower(r, 1, {2}, {rf("0")});
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(e.code(), Errc::zero_alpha);  // ring/level count mismatch is reported first
    }
    auto r1 = tower_source_ring(Fq{}, {"t"}, 1);
    try {
        make_tower(r1, 1, {2}, {parse_rational_function<Fq>("0", r1)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_alpha);
    }
    EXPECT_THROW(make_tower(r1, 1, {1}, {parse_rational_function<Fq>("t", r1)}), Error);
    EXPECT_THROW(make_tower(r1, 1, {2}, {parse_rational_function<Fq>("D1+t", r1)}), Error);
    EXPECT_NO_THROW(make_tower(r, 1, {2, 2}, {rf("t"), rf("D1+t")}));
    auto b = build({"t"}, {2}, {"t"}, {"t"});
    EXPECT_THROW(build_tower_system(b.tower, b.param), Error);
}

TEST(IncidenceIdeals, EllipseRestricted) {
    auto b = ellipse_tower();
    auto sys = build_tower_system(b.tower, b.param);
    auto X = over({"x1", "x2", "s"}, "x1^2+4*x2^2-1");
    auto ideals = tower_incidence_ideals(sys, std::optional(X));
    EXPECT_EQ(dimension(ideals.A), 2);
    EXPECT_EQ(ideals.A.ring()->names().back(), "Y4");
    auto report = tower_dimension_check(sys, std::optional(X));
    EXPECT_EQ(report.dimension, 2);
    EXPECT_EQ(report.expected, 2);
    EXPECT_TRUE(report.pass);
}

TEST(IncidenceIdeals, UnrestrictedToy) {
    auto b = build({"t"}, {2}, {"t"}, {"t", "D1", "D1+t"});
    auto sys = build_tower_system(b.tower, b.param);
    auto report = tower_dimension_check(sys, std::nullopt);
    EXPECT_EQ(report.dimension, 1);
    EXPECT_TRUE(report.pass);
}

TEST(IncidenceIdeals, RestrictionIllDefined) {
    auto b = build({"x1", "x2"}, {2}, {"x2/x1"}, {"x1", "x2", "D1"});
    auto sys = build_tower_system(b.tower, b.param);
    auto X = over({"x1", "x2"}, "x1");
    try {
        tower_incidence_ideals(sys, std::optional(X));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::restriction_ill_defined);
    }
}

TEST(TowerDimensionCheck, CardioidRestricted) {
    auto b = cardioid_tower();
    auto sys = build_tower_system(b.tower, b.param);
    auto X = over({"x1", "x2", "s"}, "(x1^2+x2^2+x1)^2-(x1^2+x2^2)");
    auto report = tower_dimension_check(sys, std::optional(X));
    EXPECT_EQ(report.dimension, 2);
    EXPECT_TRUE(report.pass);
}

TEST(TowerDimensionCheck, EmptyVariety) {
    auto b = ellipse_tower();
    auto sys = build_tower_system(b.tower, b.param);
    auto X = over({"x1", "x2", "s"}, "1");
    auto report = tower_dimension_check(sys, std::optional(X));
    EXPECT_FALSE(report.pass);
    EXPECT_EQ(report.dimension, -1);
    EXPECT_FALSE(report.reason.empty());
}

TEST(TowerJacobianRank, Examples) {
    auto b = ellipse_tower();
    EXPECT_EQ(tower_jacobian_rank(b.tower, b.param, std::nullopt), 3);
    EXPECT_EQ(tower_jacobian_rank(b.tower, b.param, std::optional(over({"x1", "x2", "s"}, "x1^2+4*x2^2-1"))), 3);
    auto identity = build({"t1", "t2"}, {2}, {"t1"}, {"t1", "t2", "t1"});
    EXPECT_EQ(tower_jacobian_rank(identity.tower, identity.param, std::nullopt), 2);
    auto constant = build({"t1", "t2"}, {2}, {"t1"}, {"1", "2", "3/4"});
    EXPECT_EQ(tower_jacobian_rank(constant.tower, constant.param, std::nullopt), 0);
    // y depends on t only through the radical: d(D1)/dt = 1/(2 D1).
    auto radical = build({"t"}, {2}, {"t"}, {"D1", "D1^3"});
    EXPECT_EQ(tower_jacobian_rank(radical.tower, radical.param, std::nullopt), 1);
}

TEST(TowerProperties, ProjectionConsistency) {
    auto b = ellipse_tower();
    auto sys = build_tower_system(b.tower, b.param);
    auto X = over({"x1", "x2", "s"}, "x1^2+4*x2^2-1");
    auto D = tower_incidence_ideals(sys, std::optional(X)).D;
    auto staged = eliminate(eliminate(D, {"Z"}), {"D1", "D2"});
    auto direct = eliminate(D, {"Z", "D1", "D2"});
    EXPECT_TRUE(same_ideal(staged, direct));
}

TEST(TowerProperties, BranchMetadataIsInert) {
    auto plain = ellipse_tower();
    auto tagged = ellipse_tower(TowerBranch{{"1", "0", "2"}, {"-1", "1"}});
    auto sa = build_tower_system(plain.tower, plain.param);
    auto sb = build_tower_system(tagged.tower, tagged.param);
    EXPECT_EQ(sa.all(), sb.all());
    auto X = over({"x1", "x2", "s"}, "x1^2+4*x2^2-1");
    EXPECT_TRUE(same_ideal(tower_incidence_ideals(sa, std::optional(X)).A, tower_incidence_ideals(sb, std::optional(X)).A));
}
