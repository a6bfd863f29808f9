#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace optdeg {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

struct FieldSpec {
    enum class Kind { rational, prime };
    Kind kind = Kind::prime;
    std::uint32_t modulus = kDefaultPrime;

    static FieldSpec rational() { return {Kind::rational, 0}; }
    static FieldSpec prime(std::uint32_t q = kDefaultPrime) { return {Kind::prime, q}; }

    // "rational", "prime" or "prime:<q>".
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

using Rng = std::mt19937_64;

// Integer uniform in [lo, hi], independent of the standard library's distribution algorithms
// so that seeds reproduce across toolchains.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// Independent child seed for a numbered sub-stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// Z/qZ for a prime 2^20 < q < 2^31, elements stored as canonical residues.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t q = kDefaultPrime);

    std::uint32_t modulus() const noexcept { return q_; }
    FieldSpec spec() const { return FieldSpec::prime(q_); }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    bool is_one(Element a) const noexcept { return a == 1; }
    bool equal(Element a, Element b) const noexcept { return a == b; }

    Element add(Element a, Element b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Element mul(Element a, Element b) const noexcept {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % q_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_int(std::int64_t v) const noexcept;
    Element from_mpz(const mpz_class& v) const;
    // a/b; throws zero_denominator when b vanishes in the field.
    Element from_fraction(const mpz_class& num, const mpz_class& den) const;

    // Symmetric representative in (-q/2, q/2].
    std::int64_t signed_value(Element a) const noexcept {
        return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : static_cast<std::int64_t>(a);
    }
    bool is_negative(Element a) const noexcept { return a > q_ / 2; }
    std::string to_string(Element a) const { return std::to_string(signed_value(a)); }

    Element random(Rng& rng) const { return static_cast<Element>(uniform_int(rng, 0, q_ - 1)); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

private:
    std::uint32_t q_;
};

/// The rationals with GMP arbitrary precision.
class RationalField {
public:
    using Element = mpq_class;

    FieldSpec spec() const { return FieldSpec::rational(); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const;

    Element from_int(std::int64_t v) const { return Element(mpz_class(std::to_string(v))); }
    Element from_mpz(const mpz_class& v) const { return Element(v); }
    Element from_fraction(const mpz_class& num, const mpz_class& den) const;

    bool is_negative(const Element& a) const { return sgn(a) < 0; }
    std::string to_string(const Element& a) const { return a.get_str(); }

    // Integers in [-1000, 1000]; the rationals have no uniform distribution.
    Element random(Rng& rng) const { return from_int(uniform_int(rng, -1000, 1000)); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace optdeg
