#include <gtest/gtest.h>

#include "support.hpp"

using namespace optdeg;
using namespace optdeg::testing;

TEST(ParsePolynomial, EllipseHasThreeTermsOfDegreeTwo) {
    auto r = ring({"x1", "x2"});
    auto p = P(r, "x1^2+4*x2^2-1");
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.total_degree(), 2);
}

TEST(ParsePolynomial, ZeroIsEmpty) {
    auto r = ring({"x1"});
    EXPECT_TRUE(P(r, "0").is_zero());
    EXPECT_EQ(P(r, "0").size(), 0u);
}

TEST(ParsePolynomial, BinomialExpansion) {
    auto r = ring({"x1", "u1"});
    auto p = P(r, "(u1-x1)^4");
    ASSERT_EQ(p.size(), 5u);
    std::vector<std::int64_t> coeffs;
    for (const auto& t : p.terms()) coeffs.push_back(r->field().signed_value(t.coeff));
    // grevlex with x1 > u1: x1^4 leads.
    EXPECT_EQ(coeffs, (std::vector<std::int64_t>{1, -4, 6, -4, 1}));
}

TEST(ParsePolynomial, RationalLiterals) {
    auto r = ring<Fq>({"x"});
    auto p = P(r, "1/2*x-3/4");
    EXPECT_EQ(format_polynomial(p), "1/2*x-3/4");
    EXPECT_EQ(P(r, "2/4*x"), P(r, "1/2*x"));
}

TEST(ParsePolynomial, Errors) {
    auto r = ring({"x1", "x2"});
    EXPECT_THROW(P(r, "x1+y"), Error);
    try {
        P(r, "x1+y");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::undeclared_variable);
    }
    EXPECT_THROW(P(r, "2x1"), SyntaxError);
    EXPECT_THROW(P(r, "x1 x2"), SyntaxError);
    EXPECT_THROW(P(r, "x1/x2"), SyntaxError);
    EXPECT_THROW(P(r, "(x1+1"), SyntaxError);
    EXPECT_THROW(P(r, ""), SyntaxError);
    EXPECT_THROW(P(r, "x1^1.5"), SyntaxError);
    try {
        P(r, "x1^-2");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::negative_exponent);
    }
    try {
        P(r, "x1+*x2");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(ParseRationalFunction, AtomicQuotient) {
    auto r = ring({"x1", "u1"});
    auto q = parse_rational_function<Fp>("u1/x1", r);
    EXPECT_EQ(q.num, P(r, "u1"));
    EXPECT_EQ(q.den, P(r, "x1"));
}

TEST(ParseRationalFunction, PolynomialCase) {
    auto r = ring({"x1", "u1"});
    auto q = parse_rational_function<Fp>("(u1-x1)^3", r);
    EXPECT_EQ(q.num, P(r, "(u1-x1)^3"));
    EXPECT_TRUE(q.den.is_one());
}

TEST(ParseRationalFunction, Errors) {
    auto r = ring({"x1"});
    try {
        parse_rational_function<Fp>("1/0", r);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_denominator);
    }
    try {
        parse_rational_function<Fp>("x1/(x1-x1)", r);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_denominator);
    }
    EXPECT_THROW(parse_rational_function<Fp>("1/x1/x1", r), SyntaxError);
}

TEST(FormatPolynomial, CanonicalOrder) {
    auto r = ring({"x1", "x2"});
    EXPECT_EQ(format_polynomial(Polynomial<Fp>(r)), "0");
    EXPECT_EQ(format_polynomial(P(r, "4*x2^2+x1^2-1")), "x1^2+4*x2^2-1");
    EXPECT_EQ(format_polynomial(P(r, "x1-x1")), "0");
    EXPECT_EQ(format_polynomial(P(r, "-x2*x1^3+2")), "-x1^3*x2+2");
}

TEST(ParseProperties, RoundTripIsFixedPoint) {
    Rng rng(7);
    auto r = ring({"a", "b", "c"});
    auto rq = ring<Fq>({"a", "b", "c"});
    for (int i = 0; i < 200; ++i) {
        auto p = random_polynomial(r, rng, 6, 5);
        EXPECT_EQ(P(r, format_polynomial(p)), p);
        auto q = random_polynomial(rq, rng, 6, 5).scaled(mpq_class(3, 7));
        EXPECT_EQ(P(rq, format_polynomial(q)), q);
    }
}

TEST(ParseProperties, HomomorphismOnExpressions) {
    Rng rng(11);
    auto r = ring({"a", "b"});
    for (int i = 0; i < 100; ++i) {
        auto a = format_polynomial(random_polynomial(r, rng, 4, 4));
        auto b = format_polynomial(random_polynomial(r, rng, 4, 4));
        EXPECT_EQ(P(r, "(" + a + ")+(" + b + ")"), P(r, a) + P(r, b));
        EXPECT_EQ(P(r, "(" + a + ")*(" + b + ")"), P(r, a) * P(r, b));
    }
}
