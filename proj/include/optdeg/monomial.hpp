#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace optdeg {

inline constexpr std::size_t kMaxVariables = 32;

// Exponent vector with cached total degree and a support bitmask for quick divisibility rejection.
// Slots beyond the ring's variable count stay zero.
struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exp{};
    std::uint32_t degree = 0;
    std::uint32_t support = 0;

    std::uint16_t operator[](std::size_t i) const { return exp[i]; }

    void set(std::size_t i, std::uint16_t e) {
        degree = degree - exp[i] + e;
        exp[i] = e;
        if (e)
            support |= (1u << i);
        else
            support &= ~(1u << i);
    }

    bool is_one() const { return degree == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.support == b.support && a.degree == b.degree && a.exp == b.exp;
    }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// a / b, requires divides(b, a).
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

inline bool divides(const Monomial& a, const Monomial& b, std::size_t nvars) {
    if ((a.support & ~b.support) != 0 || a.degree > b.degree) return false;
    for (std::size_t i = 0; i < nvars; ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

inline bool coprime(const Monomial& a, const Monomial& b) { return (a.support & b.support) == 0; }

/// Named description of a monomial order; `front` lists the dominating block for block orders.
struct MonomialOrderSpec {
    enum class Kind { grevlex, lex, block };
    Kind kind = Kind::grevlex;
    std::vector<std::string> front;

    static MonomialOrderSpec grevlex() { return {Kind::grevlex, {}}; }
    static MonomialOrderSpec lex() { return {Kind::lex, {}}; }
    static MonomialOrderSpec block(std::vector<std::string> front) { return {Kind::block, std::move(front)}; }

    friend bool operator==(const MonomialOrderSpec&, const MonomialOrderSpec&) = default;
};

// Resolved order over a concrete variable count; compare() returns -1, 0, 1.
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(MonomialOrderSpec::Kind kind, std::size_t nvars, std::uint32_t front_mask = 0)
        : kind_(kind), nvars_(nvars), front_mask_(front_mask) {}

    MonomialOrderSpec::Kind kind() const { return kind_; }
    std::uint32_t front_mask() const { return front_mask_; }

    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case MonomialOrderSpec::Kind::grevlex:
                if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
                return revlex_tail(a, b, ~0u);
            case MonomialOrderSpec::Kind::lex:
                for (std::size_t i = 0; i < nvars_; ++i)
                    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
                return 0;
            case MonomialOrderSpec::Kind::block: {
                int c = block_compare(a, b, front_mask_);
                if (c != 0) return c;
                return block_compare(a, b, ~front_mask_);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    int revlex_tail(const Monomial& a, const Monomial& b, std::uint32_t mask) const {
        for (std::size_t i = nvars_; i-- > 0;) {
            if (!(mask >> i & 1u)) continue;
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        }
        return 0;
    }

    int block_compare(const Monomial& a, const Monomial& b, std::uint32_t mask) const {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!(mask >> i & 1u)) continue;
            da += a.exp[i];
            db += b.exp[i];
        }
        if (da != db) return da > db ? 1 : -1;
        return revlex_tail(a, b, mask);
    }

    MonomialOrderSpec::Kind kind_ = MonomialOrderSpec::Kind::grevlex;
    std::size_t nvars_ = 0;
    std::uint32_t front_mask_ = 0;
};

}  // namespace optdeg
