#pragma once

// Construction helpers shared by the critical-ideal and conormal builders.

#include <string>
#include <vector>

#include "optdeg/critical.hpp"
#include "optdeg/parse.hpp"

namespace optdeg::detail {

inline std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

template <class F>
RingPtr<F> ring_with(const VarietySpec<F>& X, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::string> extra;
    for (const auto& b : blocks)
        for (const auto& name : b) {
            if (X.ring->index_of(name))
                throw Error(Errc::invalid_argument, "variable name '" + name + "' is reserved for auxiliary coordinates");
            extra.push_back(name);
        }
    return X.ring->extended(extra);
}

template <class F>
std::vector<std::size_t> x_indices(const VarietySpec<F>& X) {
    std::vector<std::size_t> idx(X.n());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
}

template <class F>
Polynomial<F> q_p(const RingPtr<F>& ring, const std::vector<std::size_t>& vars, unsigned p) {
    Polynomial<F> q(ring);
    for (auto v : vars) q += pow(Polynomial<F>::variable(ring, v), p);
    return q;
}

template <class F>
Polynomial<F> product(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& factors) {
    auto acc = Polynomial<F>::constant(ring, ring->field().one());
    for (const auto& f : factors) acc = acc * embed(f, ring);
    return acc;
}

// Saturation that skips the unit saturand.
template <class F>
Ideal<F> saturate_unless_unit(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opts) {
    if (groebner_basis(J, opts).is_unit()) return I;
    return saturate(I, J, opts);
}

template <class F>
Ideal<F> embed_ideal(const Ideal<F>& I, const RingPtr<F>& target) {
    return Ideal<F>(target, embed_all(I.generators(), target));
}

template <class F>
void require_homogeneous(const VarietySpec<F>& X) {
    for (const auto& g : X.generators)
        if (!g.is_homogeneous()) throw Error(Errc::not_homogeneous, "generator " + format_polynomial(g) + " is not homogeneous");
}

template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, const std::vector<std::size_t>& vars, Rng& rng) {
    Polynomial<F> l(ring);
    for (auto v : vars) l += Polynomial<F>::variable(ring, v).scaled(ring->field().from_int(uniform_int(rng, -100, 100)));
    return l;
}

}  // namespace optdeg::detail

namespace optdeg::detail {

// Saturation by I(X_sing) for an ideal homogeneous in the x-block. When the singular locus is at most the
// cone vertex, a generic linear form in x does the same job as the whole ideal.
template <class F>
Ideal<F> saturate_vertex_aware(const Ideal<F>& I, const Ideal<F>& singular, const std::vector<std::size_t>& x_in_ring,
                               std::uint64_t seed, const GbOptions& opts) {
    const auto& ring = I.ring();
    if (groebner_basis(singular, opts).is_unit()) return I;
    bool vertex_only = true;
    for (std::size_t i = 0; i < singular.ring()->size() && vertex_only; ++i)
        vertex_only = vanishes_on_variety(Polynomial<F>::variable(singular.ring(), i), singular, opts);
    if (!vertex_only) return saturate(I, embed_ideal(singular, ring), opts);
    Rng rng(seed);
    return saturate(I, random_linear_form(ring, x_in_ring, rng), opts);
}

}  // namespace optdeg::detail
