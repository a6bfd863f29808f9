#include "optdeg/field.hpp"

#include <charconv>
#include <limits>

#include "optdeg/error.hpp"

namespace optdeg {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::syntax: return "SyntaxError";
        case Errc::undeclared_variable: return "UndeclaredVariable";
        case Errc::negative_exponent: return "NegativeExponent";
        case Errc::zero_denominator: return "ZeroDenominator";
        case Errc::ring_mismatch: return "RingMismatch";
        case Errc::size_out_of_range: return "SizeOutOfRange";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::not_zero_dimensional: return "NotZeroDimensional";
        case Errc::not_zero_dimensional_after_slicing: return "NotZeroDimensionalAfterSlicing";
        case Errc::inconsistent_slices: return "InconsistentSlices";
        case Errc::positive_dimensional_fiber: return "PositiveDimensionalFiber";
        case Errc::denominator_vanishes_on_x: return "DenominatorVanishesOnX";
        case Errc::not_homogeneous: return "NotHomogeneous";
        case Errc::contained_in_isotropic: return "ContainedInIsotropic";
        case Errc::collapsed_to_unit: return "CollapsedToUnit";
        case Errc::not_principal: return "NotPrincipal";
        case Errc::zero_alpha: return "ZeroAlpha";
        case Errc::restriction_ill_defined: return "RestrictionIllDefined";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::schema: return "SchemaError";
    }
    return "Error";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rational();
    if (text == "prime") return prime();
    if (text.substr(0, 6) == "prime:") {
        auto digits = text.substr(6);
        std::uint64_t q = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw Error(Errc::schema, "malformed field modulus '" + std::string(digits) + "'");
        if (q <= (1u << 20) || q >= (1ull << 31) || !is_prime(q))
            throw Error(Errc::schema, "field modulus must be a prime in (2^20, 2^31)");
        return prime(static_cast<std::uint32_t>(q));
    }
    throw Error(Errc::schema, "unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
    return kind == Kind::rational ? "rational" : "prime:" + std::to_string(modulus);
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q <= (1u << 20) || q >= (1u << 31) || !is_prime(q))
        throw Error(Errc::invalid_argument, "prime field modulus must be a prime in (2^20, 2^31)");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw Error(Errc::zero_denominator, "division by zero in prime field");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quotient = r / new_r;
        std::int64_t tmp = t - quotient * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quotient * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
    mpz_class r = v % q_;
    if (sgn(r) < 0) r += q_;
    return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw Error(Errc::zero_denominator, "denominator vanishes in the prime field");
    return div(from_mpz(num), d);
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw Error(Errc::zero_denominator, "division by zero");
    return 1 / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw Error(Errc::zero_denominator, "division by zero");
    return a / b;
}

RationalField::Element RationalField::from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (sgn(den) == 0) throw Error(Errc::zero_denominator, "zero denominator in rational literal");
    Element r(num, den);
    r.canonicalize();
    return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    Rng rng(seed ^ (salt * 0x9E3779B97F4A7C15ull));
    return rng();
}

}  // namespace optdeg
