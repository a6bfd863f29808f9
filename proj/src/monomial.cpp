#include "optdeg/monomial.hpp"

#include <limits>

#include "optdeg/error.hpp"

namespace optdeg {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.degree = a.degree + b.degree;
    r.support = a.support | b.support;
    std::uint32_t s = r.support;
    while (s) {
        int i = __builtin_ctz(s);
        s &= s - 1;
        std::uint32_t e = std::uint32_t(a.exp[i]) + b.exp[i];
        if (e > std::numeric_limits<std::uint16_t>::max())
            throw Error(Errc::invalid_argument, "exponent overflow");
        r.exp[i] = static_cast<std::uint16_t>(e);
    }
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.degree = a.degree - b.degree;
    std::uint32_t s = a.support;
    while (s) {
        int i = __builtin_ctz(s);
        s &= s - 1;
        r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
        if (r.exp[i]) r.support |= (1u << i);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.support = a.support | b.support;
    std::uint32_t s = r.support;
    while (s) {
        int i = __builtin_ctz(s);
        s &= s - 1;
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
        r.degree += r.exp[i];
    }
    return r;
}

}  // namespace optdeg
