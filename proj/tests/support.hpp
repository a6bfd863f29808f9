#pragma once

#include <string>
#include <vector>

#include "optdeg/ideal.hpp"
#include "optdeg/parse.hpp"

namespace optdeg::testing {

using Fp = PrimeField;
using Fq = RationalField;

template <class F = Fp>
RingPtr<F> ring(std::vector<std::string> names, MonomialOrderSpec order = MonomialOrderSpec::grevlex()) {
    return Ring<F>::make(F{}, std::move(names), std::move(order));
}

template <class F>
Polynomial<F> P(const RingPtr<F>& r, const std::string& text) {
    return parse_polynomial<F>(text, r);
}

template <class F>
Ideal<F> I(const RingPtr<F>& r, const std::vector<std::string>& gens) {
    Ideal<F> out(r);
    for (const auto& g : gens) out.add(parse_polynomial<F>(g, r));
    return out;
}

template <class F>
std::vector<std::string> formatted(const std::vector<Polynomial<F>>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p));
    return out;
}

}  // namespace optdeg::testing

namespace optdeg::testing {

// Random polynomial with small integer coefficients and bounded total degree.
template <class F>
Polynomial<F> random_polynomial(const RingPtr<F>& r, Rng& rng, int terms, int max_degree) {
    std::vector<Term<F>> out;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        int budget = static_cast<int>(uniform_int(rng, 0, max_degree));
        for (int d = 0; d < budget; ++d) {
            auto v = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(r->size()) - 1));
            m.set(v, m.exp[v] + 1);
        }
        out.push_back({m, r->field().from_int(uniform_int(rng, -9, 9))});
    }
    return Polynomial<F>(r, std::move(out));
}

}  // namespace optdeg::testing
