#pragma once

#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "optdeg/critical.hpp"

namespace optdeg {

struct TowerBranch {
    std::vector<std::string> t0;
    std::vector<std::string> a;
};

/// Radical tower delta_i^{d_i} = alpha_i over base variables t; alpha_i lives in C(t, D1..D_{i-1}).
template <class F>
struct TowerSpec {
    RingPtr<F> ring;  // base variables followed by D1..Dm
    std::size_t base_count = 0;
    std::vector<int> degrees;
    std::vector<RationalFunction<F>> alphas;
    std::optional<TowerBranch> branch;

    std::size_t levels() const { return degrees.size(); }
};

// Ring of the base variables followed by D1..Dm.
template <class F>
RingPtr<F> tower_source_ring(const F& field, const std::vector<std::string>& base, std::size_t levels);

// Validates degrees >= 2, nonzero alphas (ZeroAlpha) and that alpha_i uses only D1..D_{i-1}.
template <class F>
TowerSpec<F> make_tower(RingPtr<F> ring, std::size_t base_count, std::vector<int> degrees,
                        std::vector<RationalFunction<F>> alphas, std::optional<TowerBranch> branch = std::nullopt);

/// Coordinates y_1..y_r over the tower's source ring; r must exceed the base count.
template <class F>
struct ParametrizationSpec {
    std::vector<RationalFunction<F>> coords;
};

template <class F>
struct TowerSystem {
    RingPtr<F> ring;  // T, D, Y, Z
    std::size_t base_count = 0;
    std::vector<Polynomial<F>> E;
    std::vector<Polynomial<F>> G;
    Polynomial<F> GZ;
    // Product of alpha numerators, alpha denominators and y denominators, over the source ring.
    Polynomial<F> restriction_product;
    Ideal<F> E_ideal;  // over the source ring

    std::vector<Polynomial<F>> all() const {
        auto out = E;
        out.insert(out.end(), G.begin(), G.end());
        out.push_back(GZ);
        return out;
    }
};

template <class F>
TowerSystem<F> build_tower_system(const TowerSpec<F>& tw, const ParametrizationSpec<F>& pz);

template <class F>
struct IncidenceIdeals {
    Ideal<F> D;  // over T, D, Y, Z
    Ideal<F> A;  // over T, D, Y
};

// X, when given, lives over the base variables.
template <class F>
IncidenceIdeals<F> tower_incidence_ideals(const TowerSystem<F>& sys, const std::type_identity_t<std::optional<VarietySpec<F>>>& X,
                                          const GbOptions& opts = {});

struct TowerDimensionReport {
    int dimension = -1;
    int expected = 0;
    bool pass = false;
    std::string reason;
};

template <class F>
TowerDimensionReport tower_dimension_check(const TowerSystem<F>& sys, const std::type_identity_t<std::optional<VarietySpec<F>>>& X,
                                           const GbOptions& opts = {});

template <class F>
int tower_jacobian_rank(const TowerSpec<F>& tw, const ParametrizationSpec<F>& pz,
                        const std::type_identity_t<std::optional<VarietySpec<F>>>& X, const GbOptions& opts = {});

}  // namespace optdeg
