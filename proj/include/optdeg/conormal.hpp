#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "optdeg/critical.hpp"

namespace optdeg {

/// Multidegree of a biprojective subvariety of P^{n-1} x P^{n-1}: coefficient of t_x^a t_y^b.
struct BidegreeClass {
    int n = 0;
    std::map<std::pair<int, int>, std::uint64_t> coefficients;

    std::uint64_t at(int a, int b) const {
        auto it = coefficients.find({a, b});
        return it == coefficients.end() ? 0 : it->second;
    }
};

// (I(X) + (c+1)-minors of [y^s; Jac g]) : I(X_sing)^∞ in C[x, y1..yn].
template <class F>
Ideal<F> s_conormal_ideal(const VarietySpec<F>& X, unsigned s, const GbOptions& opts = {});

// (N_X^(p-1) + 3x3 minors of (x; y; u)) : (q_p(x) q_p(y))^∞ in C[x, y, u].
template <class F>
Ideal<F> joint_correspondence_ideal(const VarietySpec<F>& X, unsigned p, const GbOptions& opts = {});

// Bihomogeneous I over exactly the variables x_vars ∪ y_vars; coefficients by random linear sections.
template <class F>
BidegreeClass bidegree_class(const Ideal<F>& I, const std::vector<std::string>& x_vars,
                             const std::vector<std::string>& y_vars, std::uint64_t seed, const GbOptions& opts = {});

// delta_0..delta_{n-2}.
template <class F>
std::vector<std::int64_t> polar_classes(const VarietySpec<F>& X, std::uint64_t seed, const GbOptions& opts = {});

template <class F>
std::int64_t pnorm_degree_via_polar(const VarietySpec<F>& X, unsigned p, std::uint64_t seed, const GbOptions& opts = {});

}  // namespace optdeg
