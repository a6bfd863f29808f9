#include <gtest/gtest.h>

#include "optdeg/conormal.hpp"
#include "optdeg/formulary.hpp"
#include "support.hpp"

using namespace optdeg;
using namespace optdeg::testing;

namespace {

VarietySpec<Fp> variety(std::vector<std::string> names, const std::vector<std::string>& gens, std::uint64_t change_seed = 0) {
    auto r = ring(std::move(names));
    std::vector<Polynomial<Fp>> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    if (change_seed) {
        std::vector<std::size_t> vars(r->size());
        for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
        auto change = random_linear_change(r, vars, change_seed);
        for (auto& p : ps) p = change.apply(p);
    }
    return VarietySpec<Fp>(r, ps);
}

const std::vector<std::string> kX{"x1", "x2", "x3"};
const std::vector<std::string> kY{"y1", "y2", "y3"};

VarietySpec<Fp> conic(std::uint64_t change_seed = 0) { return variety(kX, {"x1^2+x2^2+2*x3^2"}, change_seed); }

}  // namespace

TEST(SConormal, Conic) {
    auto N = s_conormal_ideal(conic(), 1);
    EXPECT_EQ(dimension(N), 3);  // projective dimension 1 plus two scalings
    for (const auto& g : N.generators()) {
        EXPECT_TRUE(g.is_homogeneous_in(0b000111u));
        EXPECT_TRUE(g.is_homogeneous_in(0b111000u));
    }
}

TEST(SConormal, LineCone) {
    auto X = variety(kX, {"x3"});
    auto N = s_conormal_ideal(X, 1);
    EXPECT_TRUE(same_ideal(N, I(N.ring(), {"x3", "y1", "y2"})));
}

TEST(SConormal, SquaredRowAppearsForS2) {
    auto N = s_conormal_ideal(conic(), 2);
    // The minor on columns (1, 2): y1^2 * dg/dx2 - y2^2 * dg/dx1.
    auto minor = P(N.ring(), "2*x2*y1^2-2*x1*y2^2");
    EXPECT_TRUE(contains(N, minor));
}

TEST(SConormal, NotHomogeneous) {
    auto X = variety(kX, {"x1^2+x2-1"});
    try {
        s_conormal_ideal(X, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_homogeneous);
    }
}

TEST(JointCorrespondence, ConicP2) {
    auto J = joint_correspondence_ideal(conic(), 2);
    EXPECT_EQ(dimension(J), 5);
    auto names = J.ring()->names();
    EXPECT_EQ(names.size(), 9u);
    auto M = PolyMatrix<Fp>::from_rows(J.ring(), {{P(J.ring(), "x1"), P(J.ring(), "x2"), P(J.ring(), "x3")},
                                                  {P(J.ring(), "y1"), P(J.ring(), "y2"), P(J.ring(), "y3")},
                                                  {P(J.ring(), "u1"), P(J.ring(), "u2"), P(J.ring(), "u3")}});
    EXPECT_TRUE(contains(J, determinant(M)));
}

TEST(JointCorrespondence, ConicP3SliceCount) {
    auto X = conic(11);
    auto J = joint_correspondence_ideal(X, 3);
    Rng rng(5);
    std::vector<std::pair<std::string, std::uint32_t>> u;
    for (int i = 1; i <= 3; ++i) u.emplace_back("u" + std::to_string(i), X.ring->field().random(rng));
    auto xy = Ring<Fp>::make(Fp{}, {"x1", "x2", "x3", "y1", "y2", "y3"});
    Ideal<Fp> fiber(xy);
    for (const auto& g : J.generators()) fiber.add(specialize(g, u, xy));
    fiber.add(P(xy, "3*x1-7*x2+5*x3-1"));
    fiber.add(P(xy, "2*y1+9*y2-4*y3-1"));
    EXPECT_EQ(dimension(fiber), 0);
    EXPECT_EQ(degree_zero_dim(fiber), 12u);
}

TEST(JointCorrespondence, IsotropicCollapses) {
    auto X = variety(kX, {"x1^2+x2^2+x3^2"});
    try {
        joint_correspondence_ideal(X, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::collapsed_to_unit);
    }
}

TEST(BidegreeClass, ConicConormal) {
    auto cls = bidegree_class(s_conormal_ideal(conic(3), 1), kX, kY, 1);
    EXPECT_EQ(cls.coefficients, (std::map<std::pair<int, int>, std::uint64_t>{{{1, 2}, 2}, {{2, 1}, 2}}));
}

TEST(BidegreeClass, LineConormal) {
    auto cls = bidegree_class(s_conormal_ideal(variety(kX, {"x3"}), 1), kX, kY, 1);
    EXPECT_EQ(cls.coefficients, (std::map<std::pair<int, int>, std::uint64_t>{{{1, 2}, 1}, {{2, 1}, 0}}));
}

TEST(BidegreeClass, TwoConormalClassLaw) {
    auto cls = bidegree_class(s_conormal_ideal(conic(3), 2), kX, kY, 1);
    EXPECT_EQ(cls.at(2, 1), 4u);
    EXPECT_EQ(cls.at(1, 2), 8u);
}

TEST(BidegreeClass, SeedRobust) {
    auto N = s_conormal_ideal(conic(3), 1);
    for (std::uint64_t seed : {2u, 3u, 4u}) EXPECT_EQ(bidegree_class(N, kX, kY, seed).coefficients, bidegree_class(N, kX, kY, 1).coefficients);
}

TEST(PolarClasses, Examples) {
    EXPECT_EQ(polar_classes(conic(3), 1), (std::vector<std::int64_t>{2, 2}));
    EXPECT_EQ(polar_classes(variety(kX, {"x1^3+2*x2^3+3*x3^3"}, 5), 1), (std::vector<std::int64_t>{6, 3}));
    auto twisted = variety({"x1", "x2", "x3", "x4"}, {"x1*x3-x2^2", "x2*x4-x3^2", "x1*x4-x2*x3"}, 7);
    EXPECT_EQ(polar_classes(twisted, 1), (std::vector<std::int64_t>{4, 3, 0}));
}

TEST(PolarClasses, ClassicalDualityForPlaneCurves) {
    for (int d : {2, 3}) {
        auto X = variety(kX, {"x1^" + std::to_string(d) + "+2*x2^" + std::to_string(d) + "+3*x3^" + std::to_string(d)}, 13);
        EXPECT_EQ(polar_classes(X, 2), (std::vector<std::int64_t>{d * (d - 1), d}));
    }
}

TEST(PnormViaPolar, Examples) {
    EXPECT_EQ(pnorm_degree_via_polar(conic(3), 2, 1), 4);
    EXPECT_EQ(pnorm_degree_via_polar(conic(3), 4, 1), 24);
    for (unsigned p : {2u, 3u}) EXPECT_EQ(pnorm_degree_via_polar(variety(kX, {"x3"}), p, 1), (p - 1) * (p - 1));
}

TEST(PnormViaPolar, AgreesWithDirectCount) {
    auto X = conic(3);
    for (unsigned p : {2u, 3u})
        EXPECT_EQ(static_cast<std::uint64_t>(pnorm_degree_via_polar(X, p, 1)), projective_pnorm_degree(X, p, 2, 9).degree);
}
