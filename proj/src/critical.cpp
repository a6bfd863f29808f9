#include "optdeg/critical.hpp"

#include <chrono>

#include "optdeg/formulary.hpp"
#include "optdeg/parse.hpp"
#include "construct.hpp"

namespace optdeg {
namespace {

using namespace detail;

template <class F>
using Point = std::vector<typename F::Element>;

template <class F>
void validate_gradient(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, const RingPtr<F>& data) {
    if (f.gradient.size() != X.n())
        throw Error(Errc::length_mismatch, "gradient has " + std::to_string(f.gradient.size()) + " entries for " +
                                               std::to_string(X.n()) + " variables");
    for (std::size_t i = 0; i < X.n(); ++i) {
        auto num = embed(f.gradient[i].num, data);
        auto den = embed(f.gradient[i].den, data);
        if (den.is_zero()) throw Error(Errc::zero_denominator, "gradient entry with zero denominator");
        const auto ui = data->require("u" + std::to_string(i + 1));
        if (!num.uses_variable(ui) && !den.uses_variable(ui))
            throw Error(Errc::invalid_argument, "gradient entry " + std::to_string(i + 1) + " does not depend on u" +
                                                    std::to_string(i + 1));
    }
}

// Gradient row over `target`; u is specialized when bound, otherwise target is the data ring.
template <class F>
std::vector<RationalFunction<F>> gradient_row(const VarietySpec<F>& X, const ObjectiveSpec<F>& f,
                                              const std::optional<Point<F>>& u, const RingPtr<F>& target) {
    const auto n = X.n();
    std::vector<RationalFunction<F>> row;
    if (f.kind == ObjectiveSpec<F>::Kind::pnorm) {
        for (std::size_t i = 0; i < n; ++i) {
            auto ui = u ? Polynomial<F>::constant(target, (*u)[i])
                        : Polynomial<F>::variable(target, target->require("u" + std::to_string(i + 1)));
            row.emplace_back(pow(ui - Polynomial<F>::variable(target, i), f.p - 1));
        }
        return row;
    }
    std::vector<std::pair<std::string, typename F::Element>> values;
    if (u)
        for (std::size_t i = 0; i < n; ++i) values.emplace_back("u" + std::to_string(i + 1), (*u)[i]);
    for (const auto& g : f.gradient) {
        if (!u) {
            row.push_back(embed(g, target));
            continue;
        }
        auto num = specialize(g.num, values, target);
        auto den = specialize(g.den, values, target);
        if (den.is_zero()) throw Error(Errc::denominator_vanishes_on_x, "gradient denominator vanishes at the sampled u");
        row.emplace_back(std::move(num), std::move(den));
    }
    return row;
}

template <class F>
Ideal<F> critical_ideal_with(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, const std::optional<Point<F>>& u,
                             int c, const Ideal<F>& singular, const GbOptions& opts) {
    const auto target = u ? X.ring : data_ring(X);
    const auto row = gradient_row(X, f, u, target);
    const auto gens = embed_all(X.generators, target);
    auto J = derationalize(row, jacobian(gens, x_indices(X), target));
    Ideal<F> I(target, gens);
    const auto k = static_cast<std::size_t>(c + 1);
    if (k <= std::min(J.rows(), J.cols()))
        for (auto& m : minors(J, k)) I.add(std::move(m));
    std::vector<Polynomial<F>> dens;
    for (const auto& r : row) dens.push_back(r.den);
    auto den = product(target, dens);
    if (!den.is_constant()) {
        if (vanishes_on_variety(den, Ideal<F>(target, gens), opts))
            throw Error(Errc::denominator_vanishes_on_x, "gradient denominators vanish on X");
        I = saturate(I, den, opts);
    }
    return saturate_unless_unit(I, embed_ideal(singular, target), opts);
}

template <class F>
std::vector<std::string> format_point(const F& field, const Point<F>& u) {
    std::vector<std::string> out;
    for (const auto& v : u) out.push_back(format_element(field, v));
    return out;
}

template <class F>
void check_objective(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, DegreeReport& report) {
    if (f.kind == ObjectiveSpec<F>::Kind::rational_gradient) {
        const auto data = data_ring(X);
        validate_gradient(X, f, data);
        std::vector<Polynomial<F>> dens;
        for (const auto& g : f.gradient) dens.push_back(g.den);
        auto den = product(data, dens);
        if (!den.is_constant() && vanishes_on_variety(den, embed_ideal(X.ideal(), data)))
            throw Error(Errc::denominator_vanishes_on_x, "gradient denominators vanish on X");
    } else if (f.p == 1) {
        report.warnings.push_back("p = 1 is outside paper scope");
    }
}

// Runs trials of `count_at`, resampling once on a positive-dimensional fiber.
template <class F, class CountAt>
DegreeReport run_trials(const VarietySpec<F>& X, int trials, std::uint64_t seed, DegreeReport report,
                        CountAt&& count_at) {
    if (trials < 1) throw Error(Errc::invalid_argument, "at least one trial is required");
    const auto& field = X.ring->field();
    report.field = field.spec();
    report.seed = seed;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trial trial;
        const auto start = std::chrono::steady_clock::now();
        for (;;) {
            Point<F> u(X.n());
            for (auto& v : u) v = field.random(rng);
            trial.u = format_point(field, u);
            auto count = count_at(u);
            if (count) {
                trial.count = *count;
                break;
            }
            if (++trial.resamples > 1)
                throw Error(Errc::positive_dimensional_fiber,
                            "positive-dimensional fiber at two consecutive samples of u");
        }
        trial.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.trials.push_back(std::move(trial));
    }
    report.degree = report.trials.front().count;
    for (const auto& t : report.trials)
        if (t.count != report.degree) report.agreement = false;
    return report;
}

// Count of a fiber ideal; nullopt when positive-dimensional.
template <class F>
std::optional<std::uint64_t> fiber_count(const Ideal<F>& I, const GbOptions& opts) {
    const int dim = dimension(I, opts);
    if (dim < 0) return 0;
    if (dim > 0) return std::nullopt;
    return degree_zero_dim(I, opts);
}

// Dense univariate helpers, coefficients constant term first.
template <class F>
using Dense = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, Dense<F>& a) {
    while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

template <class F>
Dense<F> remainder(const F& field, Dense<F> a, const Dense<F>& b) {
    const auto inv = field.inv(b.back());
    while (a.size() >= b.size()) {
        const auto factor = field.mul(a.back(), inv);
        const auto shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]));
        a.pop_back();
        trim(field, a);
    }
    return a;
}

template <class F>
Dense<F> gcd(const F& field, Dense<F> a, Dense<F> b) {
    trim(field, a);
    trim(field, b);
    while (!b.empty()) {
        auto r = remainder(field, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Restriction of p in (u1, u2) to the line u = a + t*b, as a dense polynomial in t.
template <class F>
Dense<F> restrict_to_line(const Polynomial<F>& p, const Point<F>& a, const Point<F>& b) {
    const auto& field = p.field();
    const auto line = Ring<F>::make(field, {"t"});
    std::map<std::size_t, Polynomial<F>> images;
    const auto t = Polynomial<F>::variable(line, 0);
    for (std::size_t i = 0; i < 2; ++i)
        images.emplace(i, Polynomial<F>::constant(line, a[i]) + t.scaled(b[i]));
    auto restricted = substitute(p, images, line);
    Dense<F> out(static_cast<std::size_t>(std::max(restricted.total_degree(), 0)) + 1, field.zero());
    for (const auto& term : restricted.terms()) out[term.mono.exp[0]] = term.coeff;
    trim(field, out);
    return out;
}

}  // namespace

template <class F>
RingPtr<F> data_ring(const VarietySpec<F>& X) {
    return ring_with(X, {numbered("u", X.n())});
}

template <class F>
int codimension(const VarietySpec<F>& X, const GbOptions& opts) {
    if (X.codim) return *X.codim;
    const int dim = dimension(X.ideal(), opts);
    if (dim < 0) throw Error(Errc::invalid_argument, "X is empty (the unit ideal)");
    return static_cast<int>(X.n()) - dim;
}

template <class F>
Ideal<F> singular_locus_ideal(const VarietySpec<F>& X, const GbOptions& opts) {
    if (X.singular_ideal) return embed_ideal(*X.singular_ideal, X.ring);
    const auto c = static_cast<std::size_t>(codimension(X, opts));
    auto I = X.ideal();
    const auto J = jacobian(X.generators, x_indices(X), X.ring);
    if (c <= std::min(J.rows(), J.cols()))
        for (auto& m : minors(J, c)) I.add(std::move(m));
    return I;
}

template <class F>
Ideal<F> critical_ideal_affine(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, const std::optional<Point<F>>& u,
                               const GbOptions& opts) {
    if (u && u->size() != X.n()) throw Error(Errc::length_mismatch, "data point has the wrong length");
    if (f.kind == ObjectiveSpec<F>::Kind::rational_gradient) validate_gradient(X, f, data_ring(X));
    return critical_ideal_with(X, f, u, codimension(X, opts), singular_locus_ideal(X, opts), opts);
}

template <class F>
std::uint64_t degree_at(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, const Point<F>& u, const GbOptions& opts) {
    auto count = fiber_count(critical_ideal_affine(X, f, u, opts), opts);
    if (!count) throw Error(Errc::positive_dimensional_fiber, "the critical ideal at this u is positive-dimensional");
    return *count;
}

template <class F>
DegreeReport algebraic_degree(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, int trials, std::uint64_t seed,
                              const GbOptions& opts) {
    DegreeReport report;
    check_objective(X, f, report);
    const int c = codimension(X, opts);
    const auto singular = singular_locus_ideal(X, opts);
    return run_trials(X, trials, seed, std::move(report), [&](const Point<F>& u) {
        return fiber_count(critical_ideal_with(X, f, std::optional<Point<F>>(u), c, singular, opts), opts);
    });
}

template <class F>
Ideal<F> projective_critical_ideal(const VarietySpec<F>& X, unsigned p, const std::optional<Point<F>>& u,
                                   const GbOptions& opts) {
    if (p < 1) throw Error(Errc::invalid_argument, "p must be at least 1");
    if (u && u->size() != X.n()) throw Error(Errc::length_mismatch, "data point has the wrong length");
    require_homogeneous(X);
    const auto n = X.n();
    const auto xs = x_indices(X);
    if (vanishes_on_variety(q_p(X.ring, xs, p), X.ideal(), opts))
        throw Error(Errc::contained_in_isotropic, "X is contained in the isotropic quadric Q_p");
    const auto y_names = numbered("y", n);
    const auto ring = u ? ring_with(X, {y_names}) : ring_with(X, {y_names, numbered("u", n)});
    std::vector<Polynomial<F>> y, uu, x;
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(Polynomial<F>::variable(ring, i));
        y.push_back(Polynomial<F>::variable(ring, n + i));
        uu.push_back(u ? Polynomial<F>::constant(ring, (*u)[i]) : Polynomial<F>::variable(ring, 2 * n + i));
    }
    const auto gens = embed_all(X.generators, ring);
    const int c = codimension(X, opts);
    const auto jac = jacobian(gens, xs, ring);
    std::vector<Polynomial<F>> top;
    for (const auto& yi : y) top.push_back(pow(yi, p - 1));
    const auto M = PolyMatrix<F>::stack(PolyMatrix<F>::from_rows(ring, {top}), jac);
    Ideal<F> I(ring, gens);
    const auto k = static_cast<std::size_t>(c + 1);
    if (k <= std::min(M.rows(), M.cols()))
        for (auto& m : minors(M, k)) I.add(std::move(m));
    if (n >= 3)
        for (auto& m : minors(PolyMatrix<F>::from_rows(ring, {y, uu, x}), 3)) I.add(std::move(m));

    const auto singular = singular_locus_ideal(X, opts);
    const auto qx = q_p(ring, xs, p);
    if (!vanishes_on_variety(embed(qx, X.ring), singular, opts)) I = saturate_unless_unit(I, embed_ideal(singular, ring), opts);
    I = saturate(I, qx, opts);
    // The ideal is homogeneous in y, so saturating by a generic linear form in y equals saturating by <y>.
    Rng rng(derive_seed(0x5eed, n));
    std::vector<std::size_t> ys;
    for (std::size_t i = 0; i < n; ++i) ys.push_back(n + i);
    I = saturate(I, random_linear_form(ring, ys, rng), opts);
    return eliminate(I, y_names, opts);
}

template <class F>
DegreeReport projective_pnorm_degree(const VarietySpec<F>& X, unsigned p, int trials, std::uint64_t seed,
                                     const GbOptions& opts) {
    DegreeReport report;
    if (p == 1) report.warnings.push_back("p = 1 is outside paper scope");
    require_homogeneous(X);
    Rng chart_rng(derive_seed(seed, 7));
    return run_trials(X, trials, seed, std::move(report), [&](const Point<F>& u) {
        auto I = projective_critical_ideal(X, p, std::optional<Point<F>>(u), opts);
        const auto& ring = I.ring();
        std::vector<std::size_t> xs;
        for (std::size_t i = 0; i < X.n(); ++i) xs.push_back(ring->require(X.ring->name(i)));
        I.add(random_linear_form(ring, xs, chart_rng) - Polynomial<F>::constant(ring, ring->field().one()));
        return fiber_count(I, opts);
    });
}

template <class F>
bool ci_degree_bound_check(const VarietySpec<F>& X, unsigned p, const DegreeReport& report) {
    std::vector<std::int64_t> degrees;
    for (const auto& g : X.generators) degrees.push_back(g.total_degree());
    const auto bound = ci_bound(degrees, static_cast<int>(X.n()), p);
    return static_cast<std::int64_t>(report.degree) <= bound;
}

template <class F>
int squarefree_degree(const F& field, Dense<F> coeffs) {
    trim(field, coeffs);
    if (coeffs.size() <= 1) return 0;
    Dense<F> deriv(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) deriv[i - 1] = field.mul(field.from_int(static_cast<std::int64_t>(i)), coeffs[i]);
    const auto g = gcd(field, coeffs, deriv);
    return static_cast<int>(coeffs.size()) - static_cast<int>(g.size());
}

template <class F>
EvolutePolynomial<F> evolute_curve(const VarietySpec<F>& X, unsigned p, std::uint64_t seed, const GbOptions& opts) {
    if (X.n() != 2) throw Error(Errc::invalid_argument, "evolutes are defined for plane curves");
    if (X.generators.size() != 1) throw Error(Errc::invalid_argument, "evolutes need a single defining polynomial");
    if (p < 2) throw Error(Errc::invalid_argument, "evolutes need p >= 2");
    const auto& field = X.ring->field();
    Rng rng(seed);
    const auto ring = data_ring(X);
    const auto g = embed(X.generators[0], ring);
    const auto x1 = Polynomial<F>::variable(ring, 0), x2 = Polynomial<F>::variable(ring, 1);
    const auto u1 = Polynomial<F>::variable(ring, 2), u2 = Polynomial<F>::variable(ring, 3);
    const auto h = derivative(g, 0) * pow(u2 - x2, p - 1) - derivative(g, 1) * pow(u1 - x1, p - 1);
    Ideal<F> I(ring, {g, h, determinant(jacobian<F>({g, h}, std::vector<std::size_t>{0, 1}, ring))});
    I = saturate_unless_unit(I, embed_ideal(singular_locus_ideal(X, opts), ring), opts);
    auto E = eliminate(I, {X.ring->name(0), X.ring->name(1)}, opts);
    // For p >= 3 the Jacobian determinant vanishes on the diagonal u = x, whose image is X itself in the u-plane.
    if (p >= 3) {
        std::map<std::size_t, Polynomial<F>> to_u{{0, Polynomial<F>::variable(E.ring(), 0)},
                                                  {1, Polynomial<F>::variable(E.ring(), 1)}};
        E = saturate(E, substitute(X.generators[0], to_u, E.ring()), opts);
    }

    EvolutePolynomial<F> out{Polynomial<F>(E.ring()), E.generators(), true, 0, {}};
    if (E.generators().empty()) throw Error(Errc::not_principal, "the elimination ideal is zero");
    Point<F> a{field.random(rng), field.random(rng)}, b{field.random(rng), field.random(rng)};
    if (E.generators().size() == 1) {
        out.poly = E.generators()[0];
        out.reduced_degree = squarefree_degree(field, restrict_to_line(out.poly, a, b));
        return out;
    }
    // Non-principal: the codimension-one part restricts to the gcd on a generic line.
    out.principal = false;
    out.warnings.push_back("elimination ideal is not principal (" + std::to_string(E.generators().size()) +
                           " generators); degree read from the gcd on a random line");
    Dense<F> common;
    for (const auto& gen : E.generators()) common = gcd(field, common, restrict_to_line(gen, a, b));
    out.poly = E.generators()[0];
    out.reduced_degree = squarefree_degree(field, common);
    return out;
}

#define OPTDEG_INSTANTIATE(F)                                                                                       \
    template RingPtr<F> data_ring<F>(const VarietySpec<F>&);                                                         \
    template int codimension<F>(const VarietySpec<F>&, const GbOptions&);                                            \
    template Ideal<F> singular_locus_ideal<F>(const VarietySpec<F>&, const GbOptions&);                              \
    template Ideal<F> critical_ideal_affine<F>(const VarietySpec<F>&, const ObjectiveSpec<F>&,                       \
                                               const std::optional<Point<F>>&, const GbOptions&);                    \
    template DegreeReport algebraic_degree<F>(const VarietySpec<F>&, const ObjectiveSpec<F>&, int, std::uint64_t,    \
                                              const GbOptions&);                                                     \
    template std::uint64_t degree_at<F>(const VarietySpec<F>&, const ObjectiveSpec<F>&, const Point<F>&,             \
                                        const GbOptions&);                                                           \
    template Ideal<F> projective_critical_ideal<F>(const VarietySpec<F>&, unsigned, const std::optional<Point<F>>&,  \
                                                   const GbOptions&);                                                \
    template DegreeReport projective_pnorm_degree<F>(const VarietySpec<F>&, unsigned, int, std::uint64_t,            \
                                                     const GbOptions&);                                              \
    template bool ci_degree_bound_check<F>(const VarietySpec<F>&, unsigned, const DegreeReport&);                     \
    template EvolutePolynomial<F> evolute_curve<F>(const VarietySpec<F>&, unsigned, std::uint64_t, const GbOptions&); \
    template int squarefree_degree<F>(const F&, Dense<F>);

OPTDEG_INSTANTIATE(PrimeField)
OPTDEG_INSTANTIATE(RationalField)

}  // namespace optdeg
