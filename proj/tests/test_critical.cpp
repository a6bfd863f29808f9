#include <gtest/gtest.h>

#include <algorithm>

#include "optdeg/critical.hpp"
#include "support.hpp"

using namespace optdeg;
using namespace optdeg::testing;

namespace {

template <class F = Fp>
VarietySpec<F> variety(std::vector<std::string> names, const std::vector<std::string>& gens) {
    auto r = ring<F>(std::move(names));
    std::vector<Polynomial<F>> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    return VarietySpec<F>(r, ps);
}

template <class F = Fp>
VarietySpec<F> ellipse() {
    return variety<F>({"x1", "x2"}, {"x1^2+4*x2^2-1"});
}

template <class F>
bool same_zero_set(const Ideal<F>& a, const Ideal<F>& b) {
    for (const auto& g : a.generators())
        if (!vanishes_on_variety(g, b)) return false;
    for (const auto& g : b.generators())
        if (!vanishes_on_variety(g, a)) return false;
    return true;
}

// Dense polynomial of degree d in x1, x2 with random coefficients in [-9, 9].
template <class F>
VarietySpec<F> random_plane_curve(int d, Rng& rng) {
    auto r = ring<F>({"x1", "x2"});
    Polynomial<F> g(r);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            Monomial m;
            m.set(0, i);
            m.set(1, j);
            g += Polynomial<F>::monomial(r, m, r->field().from_int(uniform_int(rng, -9, 9)));
        }
    return VarietySpec<F>(r, {g});
}

template <class F>
VarietySpec<F> general_coordinates(const VarietySpec<F>& X, std::uint64_t seed) {
    std::vector<std::size_t> vars(X.n());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    auto change = random_linear_change(X.ring, vars, seed);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : X.generators) gens.push_back(change.apply(g));
    return VarietySpec<F>(X.ring, gens);
}

}  // namespace

TEST(SingularLocus, Examples) {
    EXPECT_TRUE(groebner_basis(singular_locus_ideal(ellipse())).is_unit());
    auto line = variety({"x1", "x2"}, {"x1+x2-1"});
    EXPECT_TRUE(groebner_basis(singular_locus_ideal(line)).is_unit());
    auto cardioid = variety({"x1", "x2"}, {"(x1^2+x2^2+x1)^2-(x1^2+x2^2)"});
    auto S = singular_locus_ideal(cardioid);
    EXPECT_EQ(dimension(S), 0);
    EXPECT_TRUE(vanishes_on_variety(P(cardioid.ring, "x1"), S));
    EXPECT_TRUE(vanishes_on_variety(P(cardioid.ring, "x2"), S));
}

TEST(SingularLocus, OverrideWins) {
    auto X = ellipse();
    X.singular_ideal = I(X.ring, {"x1", "x2"});
    EXPECT_EQ(formatted(singular_locus_ideal(X).generators()), (std::vector<std::string>{"x1", "x2"}));
}

TEST(VarietySpec, Validation) {
    auto r = ring({"x1", "x2"});
    EXPECT_THROW(VarietySpec<Fp>(r, {Polynomial<Fp>(r)}), Error);
    EXPECT_THROW(VarietySpec<Fp>(r, {P(r, "x1")}, 3), Error);
    EXPECT_THROW(ObjectiveSpec<Fp>::pnorm(0), Error);
}

TEST(CriticalIdealAffine, EllipseSymbolicP4) {
    auto X = ellipse();
    auto crit = critical_ideal_affine(X, ObjectiveSpec<Fp>::pnorm(4));
    auto data = crit.ring();
    auto paper = I(data, {"x1^2+4*x2^2-1", "4*x2*(u1-x1)^3-x1*(u2-x2)^3"});
    EXPECT_TRUE(same_zero_set(crit, paper));
    EXPECT_EQ(dimension(crit), 2);
}

TEST(CriticalIdealAffine, UnitCircleP2) {
    auto X = variety({"x1", "x2"}, {"x1^2+x2^2-1"});
    auto crit = critical_ideal_affine(X, ObjectiveSpec<Fp>::pnorm(2));
    EXPECT_TRUE(same_ideal(crit, I(crit.ring(), {"x1^2+x2^2-1", "x1*u2-x2*u1"})));
}

TEST(CriticalIdealAffine, LineMaximumLikelihood) {
    auto X = variety<Fq>({"x1", "x2"}, {"x1+x2-1"});
    auto data = data_ring(X);
    auto f = ObjectiveSpec<Fq>::rational(
        {parse_rational_function<Fq>("u1/x1", data), parse_rational_function<Fq>("u2/x2", data)});
    auto symbolic = critical_ideal_affine(X, f);
    EXPECT_TRUE(same_zero_set(symbolic, I(symbolic.ring(), {"x1+x2-1", "u1*x2-u2*x1"})));
    std::vector<mpq_class> u{1, 2};
    auto at = critical_ideal_affine(X, f, u);
    EXPECT_EQ(formatted(groebner_basis(at).basis), (std::vector<std::string>{"x2-2/3", "x1-1/3"}));
    EXPECT_EQ(degree_at(X, f, u), 1u);
}

TEST(CriticalIdealAffine, GradientMustDependOnU) {
    auto X = variety({"x1", "x2"}, {"x1+x2-1"});
    auto data = data_ring(X);
    auto f = ObjectiveSpec<Fp>::rational({parse_rational_function<Fp>("u1/x1", data), parse_rational_function<Fp>("1/x2", data)});
    EXPECT_THROW(critical_ideal_affine(X, f), Error);
    auto short_grad = ObjectiveSpec<Fp>::rational({parse_rational_function<Fp>("u1", data)});
    EXPECT_THROW(critical_ideal_affine(X, short_grad), Error);
}

TEST(CriticalIdealAffine, DenominatorVanishesOnX) {
    auto X = variety({"x1", "x2"}, {"x1"});
    auto data = data_ring(X);
    auto f = ObjectiveSpec<Fp>::rational({parse_rational_function<Fp>("u1/x1", data), parse_rational_function<Fp>("u2/x2", data)});
    try {
        critical_ideal_affine(X, f);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::denominator_vanishes_on_x);
    }
}

TEST(AlgebraicDegree, Ellipse) {
    auto X = ellipse();
    auto r4 = algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(4), 3, 11);
    EXPECT_EQ(r4.degree, 8u);
    EXPECT_TRUE(r4.agreement);
    EXPECT_EQ(r4.trials.size(), 3u);
    EXPECT_EQ(algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(3), 2, 5).degree, 6u);
    auto Xq = ellipse<Fq>();
    std::vector<mpq_class> u{mpq_class(-6, 10), mpq_class(6, 10)};
    EXPECT_EQ(degree_at(Xq, ObjectiveSpec<Fq>::pnorm(3), u), 6u);
}

TEST(AlgebraicDegree, UnitCircle) {
    auto X = variety({"x1", "x2"}, {"x1^2+x2^2-1"});
    EXPECT_EQ(algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(2), 2, 1).degree, 2u);
}

TEST(AlgebraicDegree, PEqualsOneIsFlagged) {
    auto X = variety({"x1", "x2"}, {"x1^2+4*x2^2-1"});
    auto r = algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(1), 2, 1);
    ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(AlgebraicDegree, ReportIsDeterministic) {
    auto X = ellipse();
    auto a = algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(3), 2, 42);
    auto b = algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(3), 2, 42);
    for (std::size_t i = 0; i < a.trials.size(); ++i) EXPECT_EQ(a.trials[i].u, b.trials[i].u);
}

TEST(AlgebraicDegree, ConstantFiberCardinality) {
    auto r = algebraic_degree(ellipse(), ObjectiveSpec<Fp>::pnorm(4), 5, 2024);
    EXPECT_TRUE(r.agreement);
    for (const auto& t : r.trials) EXPECT_EQ(t.count, 8u);
}

TEST(AlgebraicDegree, PermutationEquivariance) {
    auto swapped = variety({"x1", "x2"}, {"x2^2+4*x1^2-1"});
    for (unsigned p : {2u, 3u, 4u})
        EXPECT_EQ(algebraic_degree(swapped, ObjectiveSpec<Fp>::pnorm(p), 2, p).degree,
                  algebraic_degree(ellipse(), ObjectiveSpec<Fp>::pnorm(p), 2, p).degree);
}

TEST(AlgebraicDegree, AffinePlaneCurves) {
    Rng rng(7);
    for (int d : {2, 3}) {
        auto X = random_plane_curve<Fp>(d, rng);
        for (unsigned p = 2; p <= 5; ++p)
            EXPECT_EQ(algebraic_degree(X, ObjectiveSpec<Fp>::pnorm(p), 2, p).degree,
                      static_cast<std::uint64_t>(d * (d + static_cast<int>(p) - 2)))
                << "d=" << d << " p=" << p;
    }
}

TEST(AlgebraicDegree, RationalAgreesWithPrime) {
    auto Xp = ellipse<Fp>();
    auto Xq = ellipse<Fq>();
    for (unsigned p : {3u, 4u}) {
        std::vector<std::uint32_t> up{17, 5};
        std::vector<mpq_class> uq{17, 5};
        EXPECT_EQ(degree_at(Xp, ObjectiveSpec<Fp>::pnorm(p), up), degree_at(Xq, ObjectiveSpec<Fq>::pnorm(p), uq));
    }
}

TEST(CorrespondenceDimension, EllipseAndCardioid) {
    for (unsigned p : {3u, 4u}) EXPECT_EQ(dimension(critical_ideal_affine(ellipse(), ObjectiveSpec<Fp>::pnorm(p))), 2);
    auto X = variety({"x1", "x2"}, {"(x1^2+x2^2+x1)^2-(x1^2+x2^2)"});
    auto data = data_ring(X);
    auto f = ObjectiveSpec<Fp>::rational({parse_rational_function<Fp>("3*(u1-x1)^2-2*(u1-x1)+5", data),
                                          parse_rational_function<Fp>("-2*(u2-x2)^2+7*(u2-x2)-4", data)});
    EXPECT_EQ(dimension(critical_ideal_affine(X, f)), 2);
}

TEST(ProjectiveCriticalIdeal, ConeFibers) {
    auto X = variety({"x1", "x2", "x3"}, {"x1^2+2*x2^2+3*x3^2"});
    std::vector<std::uint32_t> u{3, 7, 11};
    auto C = projective_critical_ideal(X, 2, u);
    for (const auto& g : C.generators()) EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(dimension(C), 1);
}

TEST(ProjectiveCriticalIdeal, SymbolicUKeepsXandU) {
    auto X = variety({"x1", "x2", "x3"}, {"x1^2+2*x2^2+3*x3^2"});
    auto C = projective_critical_ideal(X, 2);
    EXPECT_EQ(C.ring()->names(), (std::vector<std::string>{"x1", "x2", "x3", "u1", "u2", "u3"}));
}

TEST(ProjectiveCriticalIdeal, Errors) {
    auto X = variety({"x1", "x2"}, {"x1^2+x2-1"});
    try {
        projective_critical_ideal(X, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_homogeneous);
    }
    auto iso = variety({"x1", "x2", "x3"}, {"x1^2+x2^2+x3^2"});
    try {
        projective_critical_ideal(iso, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::contained_in_isotropic);
    }
}

TEST(ProjectivePnormDegree, LineCone) {
    auto X = variety({"x1", "x2"}, {"x2"});
    for (unsigned p : {2u, 3u}) EXPECT_LE(projective_pnorm_degree(X, p, 2, p).degree, 1u);
}

TEST(ProjectivePnormDegree, Conic) {
    auto X = general_coordinates(variety({"x1", "x2", "x3"}, {"x1^2+2*x2^2+3*x3^2"}), 3);
    EXPECT_EQ(projective_pnorm_degree(X, 2, 2, 1).degree, 4u);
    EXPECT_EQ(projective_pnorm_degree(X, 3, 2, 1).degree, 12u);
}

TEST(ProjectivePnormDegree, RationalNormalConic) {
    auto X = general_coordinates(variety({"x1", "x2", "x3"}, {"x1*x3-x2^2"}), 9);
    EXPECT_EQ(projective_pnorm_degree(X, 2, 2, 4).degree, 4u);
}

TEST(CiDegreeBound, Examples) {
    auto X = ellipse();
    DegreeReport r;
    r.degree = 6;
    EXPECT_TRUE(ci_degree_bound_check(X, 3, r));
    r.degree = 7;
    EXPECT_FALSE(ci_degree_bound_check(X, 3, r));
    r.degree = 4;
    EXPECT_TRUE(ci_degree_bound_check(X, 2, r));
    Rng rng(3);
    auto cubic = random_plane_curve<Fp>(3, rng);
    auto report = algebraic_degree(cubic, ObjectiveSpec<Fp>::pnorm(2), 2, 3);
    EXPECT_EQ(report.degree, 9u);
    EXPECT_TRUE(ci_degree_bound_check(cubic, 2, report));
}

TEST(SquarefreeDegree, Examples) {
    PrimeField field;
    auto e = [&](std::int64_t v) { return field.from_int(v); };
    // (t-1)^2 (t+2)
    EXPECT_EQ(squarefree_degree(field, {e(2), e(-3), e(0), e(1)}), 2);
    EXPECT_EQ(squarefree_degree(field, {e(5)}), 0);
    EXPECT_EQ(squarefree_degree(field, {e(-1), e(0), e(1)}), 2);
}

TEST(Evolute, EllipseP2) {
    auto E = evolute_curve(ellipse(), 2, 1);
    EXPECT_TRUE(E.principal);
    EXPECT_EQ(E.reduced_degree, 6);
}

TEST(Evolute, EllipseP3DropsTheCurveItself) {
    auto E = evolute_curve(ellipse(), 3, 2);
    EXPECT_TRUE(E.principal);
    EXPECT_EQ(E.reduced_degree, 12);
    EXPECT_EQ(E.poly.total_degree(), 12);
}
