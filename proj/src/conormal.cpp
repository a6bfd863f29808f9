#include "optdeg/conormal.hpp"

#include "construct.hpp"
#include "optdeg/formulary.hpp"

namespace optdeg {
namespace {

using namespace detail;

constexpr std::uint64_t kSectionSalt = 0xc0;

template <class F>
std::vector<std::size_t> indices(const RingPtr<F>& ring, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& v : names) out.push_back(ring->require(v));
    return out;
}

// s-conormal generators in `ring`, whose first 2n variables are x then y.
template <class F>
Ideal<F> conormal_in(const VarietySpec<F>& X, unsigned s, const RingPtr<F>& ring, const GbOptions& opts) {
    require_homogeneous(X);
    const auto n = X.n();
    const auto gens = embed_all(X.generators, ring);
    std::vector<Polynomial<F>> top;
    for (std::size_t i = 0; i < n; ++i) top.push_back(pow(Polynomial<F>::variable(ring, n + i), s));
    const auto M = PolyMatrix<F>::stack(PolyMatrix<F>::from_rows(ring, {top}), jacobian(gens, x_indices(X), ring));
    Ideal<F> I(ring, gens);
    const auto k = static_cast<std::size_t>(codimension(X, opts) + 1);
    if (k <= std::min(M.rows(), M.cols()))
        for (auto& m : minors(M, k)) I.add(std::move(m));
    return saturate_vertex_aware(I, singular_locus_ideal(X, opts), x_indices(X), derive_seed(s, n), opts);
}

template <class F>
std::uint64_t section_count(const Ideal<F>& I, const std::vector<std::size_t>& xs, const std::vector<std::size_t>& ys,
                            int a, int b, std::uint64_t seed, const GbOptions& opts) {
    const auto& ring = I.ring();
    const int n = static_cast<int>(xs.size());
    Rng rng(seed);
    auto J = I;
    for (int i = 0; i < n - 1 - a; ++i) J.add(random_linear_form(ring, xs, rng));
    for (int i = 0; i < n - 1 - b; ++i) J.add(random_linear_form(ring, ys, rng));
    const auto one = Polynomial<F>::constant(ring, ring->field().one());
    J.add(random_linear_form(ring, xs, rng) - one);
    J.add(random_linear_form(ring, ys, rng) - one);
    const int dim = dimension(J, opts);
    if (dim > 0)
        throw Error(Errc::not_zero_dimensional_after_slicing,
                    "slices for t_x^" + std::to_string(a) + " t_y^" + std::to_string(b) + " left a positive-dimensional set");
    return dim < 0 ? 0 : degree_zero_dim(J, opts);
}

}  // namespace

template <class F>
Ideal<F> s_conormal_ideal(const VarietySpec<F>& X, unsigned s, const GbOptions& opts) {
    if (s < 1) throw Error(Errc::invalid_argument, "s must be at least 1");
    return conormal_in(X, s, ring_with(X, {numbered("y", X.n())}), opts);
}

template <class F>
Ideal<F> joint_correspondence_ideal(const VarietySpec<F>& X, unsigned p, const GbOptions& opts) {
    if (p < 2) throw Error(Errc::invalid_argument, "the joint correspondence needs p >= 2");
    const auto n = X.n();
    const auto ring = ring_with(X, {numbered("y", n), numbered("u", n)});
    auto I = conormal_in(X, p - 1, ring, opts);
    if (n >= 3) {
        std::vector<Polynomial<F>> x, y, u;
        for (std::size_t i = 0; i < n; ++i) {
            x.push_back(Polynomial<F>::variable(ring, i));
            y.push_back(Polynomial<F>::variable(ring, n + i));
            u.push_back(Polynomial<F>::variable(ring, 2 * n + i));
        }
        for (auto& m : minors(PolyMatrix<F>::from_rows(ring, {x, y, u}), 3)) I.add(std::move(m));
    }
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(i);
        ys.push_back(n + i);
    }
    I = saturate(I, q_p(ring, xs, p), opts);
    I = saturate(I, q_p(ring, ys, p), opts);
    if (groebner_basis(I, opts).is_unit())
        throw Error(Errc::collapsed_to_unit, "the joint correspondence is empty (X or its dual lies in Q_p)");
    return I;
}

template <class F>
BidegreeClass bidegree_class(const Ideal<F>& I, const std::vector<std::string>& x_vars,
                             const std::vector<std::string>& y_vars, std::uint64_t seed, const GbOptions& opts) {
    const auto& ring = I.ring();
    if (x_vars.size() != y_vars.size() || x_vars.empty())
        throw Error(Errc::length_mismatch, "x and y blocks must have the same positive size");
    if (x_vars.size() + y_vars.size() != ring->size())
        throw Error(Errc::invalid_argument, "the ideal must live over exactly the x and y variables");
    const auto xs = indices(ring, x_vars), ys = indices(ring, y_vars);
    const int n = static_cast<int>(x_vars.size());
    BidegreeClass out;
    out.n = n;
    const int dim = dimension(I, opts);
    if (dim < 2) return out;
    const int codim = 2 * n - dim;
    for (int a = std::max(0, codim - (n - 1)); a <= std::min(codim, n - 1); ++a) {
        const int b = codim - a;
        const auto first = section_count(I, xs, ys, a, b, derive_seed(seed, kSectionSalt + 2 * a), opts);
        const auto second = section_count(I, xs, ys, a, b, derive_seed(seed, kSectionSalt + 2 * a + 1), opts);
        if (first != second)
            throw Error(Errc::inconsistent_slices, "coefficient of t_x^" + std::to_string(a) + " t_y^" + std::to_string(b) +
                                                       " differs across seeds: " + std::to_string(first) + " vs " +
                                                       std::to_string(second));
        out.coefficients[{a, b}] = first;
    }
    return out;
}

template <class F>
std::vector<std::int64_t> polar_classes(const VarietySpec<F>& X, std::uint64_t seed, const GbOptions& opts) {
    const auto N = s_conormal_ideal(X, 1, opts);
    const int n = static_cast<int>(X.n());
    std::vector<std::string> xs(X.ring->names()), ys = numbered("y", X.n());
    const auto cls = bidegree_class(N, xs, ys, seed, opts);
    std::vector<std::int64_t> delta;
    for (int k = 0; k <= n - 2; ++k) delta.push_back(static_cast<std::int64_t>(cls.at(n - 1 - k, k + 1)));
    return delta;
}

template <class F>
std::int64_t pnorm_degree_via_polar(const VarietySpec<F>& X, unsigned p, std::uint64_t seed, const GbOptions& opts) {
    return polar_formula(p, polar_classes(X, seed, opts), static_cast<int>(X.n()));
}

#define OPTDEG_INSTANTIATE(F)                                                                                      \
    template Ideal<F> s_conormal_ideal<F>(const VarietySpec<F>&, unsigned, const GbOptions&);                       \
    template Ideal<F> joint_correspondence_ideal<F>(const VarietySpec<F>&, unsigned, const GbOptions&);             \
    template BidegreeClass bidegree_class<F>(const Ideal<F>&, const std::vector<std::string>&,                      \
                                             const std::vector<std::string>&, std::uint64_t, const GbOptions&);     \
    template std::vector<std::int64_t> polar_classes<F>(const VarietySpec<F>&, std::uint64_t, const GbOptions&);    \
    template std::int64_t pnorm_degree_via_polar<F>(const VarietySpec<F>&, unsigned, std::uint64_t, const GbOptions&);

OPTDEG_INSTANTIATE(PrimeField)
OPTDEG_INSTANTIATE(RationalField)

}  // namespace optdeg
