#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optdeg/ideal.hpp"
#include "optdeg/poly_matrix.hpp"

namespace optdeg {

/// Affine variety X = V(g) in the ring of x-variables.
template <class F>
struct VarietySpec {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> generators;
    std::optional<int> codim;
    std::optional<Ideal<F>> singular_ideal;

    VarietySpec(RingPtr<F> r, std::vector<Polynomial<F>> gens, std::optional<int> c = std::nullopt)
        : ring(std::move(r)), generators(embed_all(gens, ring)), codim(c) {
        for (const auto& g : generators)
            if (g.is_zero()) throw Error(Errc::invalid_argument, "variety generators must be nonzero");
        if (codim && (*codim < 1 || *codim > static_cast<int>(ring->size())))
            throw Error(Errc::invalid_argument, "codimension override must lie in [1, n]");
    }

    std::size_t n() const { return ring->size(); }
    Ideal<F> ideal() const { return Ideal<F>(ring, generators); }
};

/// Objective f_u: either the p-norm distance sum (u_i - x_i)^p or explicit rational partials.
template <class F>
struct ObjectiveSpec {
    enum class Kind { pnorm, rational_gradient };
    Kind kind = Kind::pnorm;
    unsigned p = 2;
    // One entry per x-variable, over the data ring (x, u1..un).
    std::vector<RationalFunction<F>> gradient;

    static ObjectiveSpec pnorm(unsigned p) {
        if (p < 1) throw Error(Errc::invalid_argument, "p must be at least 1");
        ObjectiveSpec s;
        s.p = p;
        return s;
    }
    static ObjectiveSpec rational(std::vector<RationalFunction<F>> grad) {
        ObjectiveSpec s;
        s.kind = Kind::rational_gradient;
        s.gradient = std::move(grad);
        return s;
    }
};

struct Trial {
    std::vector<std::string> u;
    std::uint64_t count = 0;
    double seconds = 0;
    int resamples = 0;
};

struct DegreeReport {
    std::uint64_t degree = 0;
    std::vector<Trial> trials;
    FieldSpec field;
    std::uint64_t seed = 0;
    bool agreement = true;
    std::vector<std::string> warnings;
};

template <class F>
struct EvolutePolynomial {
    Polynomial<F> poly;
    std::vector<Polynomial<F>> generators;
    bool principal = true;
    int reduced_degree = 0;
    std::vector<std::string> warnings;
};

// Ring x_1..x_n, u1..un used for symbolic data points.
template <class F>
RingPtr<F> data_ring(const VarietySpec<F>& X);

template <class F>
int codimension(const VarietySpec<F>& X, const GbOptions& opts = {});

template <class F>
Ideal<F> singular_locus_ideal(const VarietySpec<F>& X, const GbOptions& opts = {});

// In C[x] when u is bound, in C[x,u] when u is symbolic.
template <class F>
Ideal<F> critical_ideal_affine(const VarietySpec<F>& X, const ObjectiveSpec<F>& f,
                               const std::optional<std::vector<typename F::Element>>& u = std::nullopt,
                               const GbOptions& opts = {});

template <class F>
DegreeReport algebraic_degree(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, int trials, std::uint64_t seed,
                              const GbOptions& opts = {});

// Degree for one pinned data point.
template <class F>
std::uint64_t degree_at(const VarietySpec<F>& X, const ObjectiveSpec<F>& f, const std::vector<typename F::Element>& u,
                        const GbOptions& opts = {});

// Homogeneous construction with auxiliary y; y is eliminated, leaving C[x,u] (or C[x] with u bound).
template <class F>
Ideal<F> projective_critical_ideal(const VarietySpec<F>& X, unsigned p,
                                   const std::optional<std::vector<typename F::Element>>& u = std::nullopt,
                                   const GbOptions& opts = {});

template <class F>
DegreeReport projective_pnorm_degree(const VarietySpec<F>& X, unsigned p, int trials, std::uint64_t seed,
                                     const GbOptions& opts = {});

template <class F>
bool ci_degree_bound_check(const VarietySpec<F>& X, unsigned p, const DegreeReport& report);

template <class F>
EvolutePolynomial<F> evolute_curve(const VarietySpec<F>& X, unsigned p, std::uint64_t seed, const GbOptions& opts = {});

// Number of distinct roots of a univariate polynomial given by coefficients (constant term first).
template <class F>
int squarefree_degree(const F& field, std::vector<typename F::Element> coeffs);

}  // namespace optdeg
