#include "optdeg/tower.hpp"

#include "optdeg/parse.hpp"

namespace optdeg {
namespace {

std::string level_name(std::size_t i) { return "D" + std::to_string(i + 1); }

template <class F>
Polynomial<F> one(const RingPtr<F>& ring) {
    return Polynomial<F>::constant(ring, ring->field().one());
}

// I(X) lifted to the tower source ring, plus the tower relations.
template <class F>
Ideal<F> lifted_variety(const TowerSpec<F>& tw, const Ideal<F>& E, const std::type_identity_t<std::optional<VarietySpec<F>>>& X) {
    auto I = E;
    if (X)
        for (const auto& g : X->generators) I.add(embed(g, tw.ring));
    return I;
}

template <class F>
Ideal<F> relations(const TowerSpec<F>& tw) {
    Ideal<F> E(tw.ring);
    for (std::size_t i = 0; i < tw.levels(); ++i) {
        auto delta = Polynomial<F>::variable(tw.ring, tw.base_count + i);
        E.add(pow(delta, static_cast<unsigned>(tw.degrees[i])) * tw.alphas[i].den - tw.alphas[i].num);
    }
    return E;
}

template <class F>
void check_base_ring(const RingPtr<F>& source, std::size_t base_count, const std::type_identity_t<std::optional<VarietySpec<F>>>& X) {
    if (!X) return;
    for (const auto& name : X->ring->names())
        if (!source->index_of(name) || source->require(name) >= base_count)
            throw Error(Errc::invalid_argument, "variety variable '" + name + "' is not a tower base variable");
}

}  // namespace

template <class F>
RingPtr<F> tower_source_ring(const F& field, const std::vector<std::string>& base, std::size_t levels) {
    auto names = base;
    for (std::size_t i = 0; i < levels; ++i) names.push_back(level_name(i));
    return Ring<F>::make(field, std::move(names));
}

template <class F>
TowerSpec<F> make_tower(RingPtr<F> ring, std::size_t base_count, std::vector<int> degrees,
                        std::vector<RationalFunction<F>> alphas, std::optional<TowerBranch> branch) {
    if (degrees.size() != alphas.size()) throw Error(Errc::length_mismatch, "one degree per tower level is required");
    if (ring->size() != base_count + degrees.size())
        throw Error(Errc::invalid_argument, "tower ring must hold the base variables and one D per level");
    TowerSpec<F> tw{std::move(ring), base_count, std::move(degrees), {}, std::move(branch)};
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (tw.degrees[i] < 2) throw Error(Errc::invalid_argument, "tower degrees must be at least 2");
        auto alpha = embed(alphas[i], tw.ring);
        if (alpha.num.is_zero()) throw Error(Errc::zero_alpha, "alpha_" + std::to_string(i + 1) + " is zero");
        const std::uint32_t later = (alpha.num.support() | alpha.den.support()) >> (tw.base_count + i);
        if (later) throw Error(Errc::invalid_argument, "alpha_" + std::to_string(i + 1) + " uses D" +
                                                           std::to_string(i + 1) + " or a later level");
        tw.alphas.push_back(std::move(alpha));
    }
    return tw;
}

template <class F>
TowerSystem<F> build_tower_system(const TowerSpec<F>& tw, const ParametrizationSpec<F>& pz) {
    const auto r = pz.coords.size();
    if (r <= tw.base_count)
        throw Error(Errc::invalid_argument, "a radical parametrization needs more coordinates than base variables");
    auto names = tw.ring->names();
    for (std::size_t j = 0; j < r; ++j) {
        names.push_back("Y" + std::to_string(j + 1));
        if (tw.ring->index_of(names.back())) throw Error(Errc::invalid_argument, "variable name " + names.back() + " is reserved");
    }
    names.push_back("Z");
    if (tw.ring->index_of("Z")) throw Error(Errc::invalid_argument, "variable name Z is reserved");

    TowerSystem<F> sys;
    sys.ring = Ring<F>::make(tw.ring->field(), names);
    sys.base_count = tw.base_count;
    sys.E_ideal = relations(tw);
    for (const auto& e : sys.E_ideal.generators()) sys.E.push_back(embed(e, sys.ring));
    auto denominators = one(tw.ring);
    auto restriction = one(tw.ring);
    for (const auto& alpha : tw.alphas) {
        denominators = denominators * alpha.den;
        restriction = restriction * alpha.num * alpha.den;
    }
    for (std::size_t j = 0; j < r; ++j) {
        auto y = embed(pz.coords[j], tw.ring);
        if (y.den.is_zero()) throw Error(Errc::zero_denominator, "parametrization coordinate with zero denominator");
        const auto Y = Polynomial<F>::variable(sys.ring, tw.ring->size() + j);
        sys.G.push_back(Y * embed(y.den, sys.ring) - embed(y.num, sys.ring));
        denominators = denominators * y.den;
        restriction = restriction * y.den;
    }
    sys.GZ = Polynomial<F>::variable(sys.ring, sys.ring->size() - 1) * embed(denominators, sys.ring) - one(sys.ring);
    sys.restriction_product = restriction;
    return sys;
}

template <class F>
IncidenceIdeals<F> tower_incidence_ideals(const TowerSystem<F>& sys, const std::type_identity_t<std::optional<VarietySpec<F>>>& X,
                                          const GbOptions& opts) {
    Ideal<F> D(sys.ring, sys.all());
    if (X) {
        check_base_ring(sys.E_ideal.ring(), sys.base_count, X);
        auto lifted = sys.E_ideal;
        for (const auto& g : X->generators) lifted.add(embed(g, sys.E_ideal.ring()));
        if (vanishes_on_variety(sys.restriction_product, lifted, opts))
            throw Error(Errc::restriction_ill_defined,
                        "the tower's numerators or denominators vanish on X; the restriction is not defined");
        for (const auto& g : X->generators) D.add(embed(g, sys.ring));
    }
    return {D, eliminate(D, {"Z"}, opts)};
}

template <class F>
TowerDimensionReport tower_dimension_check(const TowerSystem<F>& sys, const std::type_identity_t<std::optional<VarietySpec<F>>>& X,
                                           const GbOptions& opts) {
    TowerDimensionReport report;
    if (X && groebner_basis(X->ideal(), opts).is_unit()) {
        report.reason = "X is empty";
        return report;
    }
    const auto ideals = tower_incidence_ideals(sys, X, opts);
    report.dimension = dimension(ideals.A, opts);
    report.expected = static_cast<int>(sys.base_count) - (X ? codimension(*X, opts) : 0);
    if (report.dimension < 0) {
        report.reason = "A_P is empty";
        return report;
    }
    report.pass = report.dimension == report.expected;
    if (!report.pass)
        report.reason = "dimension " + std::to_string(report.dimension) + " differs from the expected " +
                        std::to_string(report.expected);
    return report;
}

template <class F>
int tower_jacobian_rank(const TowerSpec<F>& tw, const ParametrizationSpec<F>& pz,
                        const std::type_identity_t<std::optional<VarietySpec<F>>>& X, const GbOptions& opts) {
    check_base_ring(tw.ring, tw.base_count, X);
    const auto& ring = tw.ring;
    const auto n = tw.base_count;
    const auto m = tw.levels();
    // dDelta[i][j] = dDelta_i / dt_j, from d_i Delta_i^{d_i - 1} dDelta_i = d alpha_i.
    std::vector<std::vector<RationalFunction<F>>> dDelta(m);
    auto total = [&](const RationalFunction<F>& f, std::size_t j, std::size_t upto) {
        auto acc = derivative(f, j);
        for (std::size_t k = 0; k < upto; ++k) acc = acc + derivative(f, n + k) * dDelta[k][j];
        return acc;
    };
    for (std::size_t i = 0; i < m; ++i) {
        const auto delta = Polynomial<F>::variable(ring, n + i);
        const auto scale = pow(delta, static_cast<unsigned>(tw.degrees[i] - 1)).scaled(ring->field().from_int(tw.degrees[i]));
        for (std::size_t j = 0; j < n; ++j) {
            auto d = total(tw.alphas[i], j, i);
            dDelta[i].push_back(RationalFunction<F>(d.num, d.den * scale));
        }
    }
    // Rows of the Jacobian of y with denominators cleared row by row.
    PolyMatrix<F> J(ring, pz.coords.size(), n);
    for (std::size_t l = 0; l < pz.coords.size(); ++l) {
        const auto y = embed(pz.coords[l], ring);
        std::vector<RationalFunction<F>> row;
        auto common = one(ring);
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(total(y, j, m));
            common = common * row.back().den;
        }
        for (std::size_t j = 0; j < n; ++j) J(l, j) = exact_divide(row[j].num * common, row[j].den);
    }
    const auto variety = lifted_variety(tw, relations(tw), X);
    for (std::size_t k = std::min(J.rows(), J.cols()); k >= 1; --k)
        for (const auto& minor : minors(J, k))
            if (!vanishes_on_variety(minor, variety, opts)) return static_cast<int>(k);
    return 0;
}

#define OPTDEG_INSTANTIATE(F)                                                                                         \
    template RingPtr<F> tower_source_ring<F>(const F&, const std::vector<std::string>&, std::size_t);                 \
    template TowerSpec<F> make_tower<F>(RingPtr<F>, std::size_t, std::vector<int>, std::vector<RationalFunction<F>>,   \
                                        std::optional<TowerBranch>);                                                  \
    template TowerSystem<F> build_tower_system<F>(const TowerSpec<F>&, const ParametrizationSpec<F>&);                \
    template IncidenceIdeals<F> tower_incidence_ideals<F>(const TowerSystem<F>&, const std::type_identity_t<std::optional<VarietySpec<F>>>&, \
                                                          const GbOptions&);                                          \
    template TowerDimensionReport tower_dimension_check<F>(const TowerSystem<F>&,                                      \
                                                           const std::type_identity_t<std::optional<VarietySpec<F>>>&, const GbOptions&);   \
    template int tower_jacobian_rank<F>(const TowerSpec<F>&, const ParametrizationSpec<F>&,                           \
                                        const std::type_identity_t<std::optional<VarietySpec<F>>>&, const GbOptions&);

OPTDEG_INSTANTIATE(PrimeField)
OPTDEG_INSTANTIATE(RationalField)

}  // namespace optdeg
