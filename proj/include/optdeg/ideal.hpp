#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optdeg/polynomial.hpp"

namespace optdeg {

enum class PairSelection { normal, sugar };

struct GbOptions {
    std::uint64_t step_budget = 10'000'000;
    PairSelection selection = PairSelection::normal;
};

/// Generators in one ring; zero generators are dropped on construction.
template <class F>
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) add(std::move(g));
    }

    static Ideal unit(RingPtr<F> ring) {
        auto one = Polynomial<F>::constant(ring, ring->field().one());
        return Ideal(std::move(ring), {std::move(one)});
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    void add(Polynomial<F> g) {
        if (g.is_zero()) return;
        gens_.push_back(embed(g, ring_));
        reduced_ = false;
    }

    Ideal operator+(const Ideal& other) const {
        Ideal r = *this;
        for (const auto& g : other.gens_) r.add(g);
        return r;
    }

    // Set when the generators are known to be the reduced basis for the ring's order.
    bool known_reduced() const { return reduced_; }
    void mark_reduced() { reduced_ = true; }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    bool reduced_ = false;
};

/// Reduced Gröbner basis: monic, interreduced, sorted by increasing leading monomial.
template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> basis;

    bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
    bool is_zero() const { return basis.empty(); }
    Ideal<F> ideal() const {
        Ideal<F> I(ring, basis);
        I.mark_reduced();
        return I;
    }
};

// Reduced basis in the ideal's own ring order.
template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const GbOptions& opts = {});

// Reduced basis after moving the ideal into the same variables under `order`.
template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const MonomialOrderSpec& order, const GbOptions& opts = {});

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G);

template <class F>
bool contains(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opts = {});

// I ∩ k[remaining variables], returned in the ring of the remaining variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop, const GbOptions& opts = {});

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opts = {});

// (I : J^∞) as the intersection of the single-generator saturations.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opts = {});

template <class F>
Ideal<F> intersect(const Ideal<F>& A, const Ideal<F>& B, const GbOptions& opts = {});

// Krull dimension of the affine zero set; -1 for the unit ideal.
template <class F>
int dimension(const Ideal<F>& I, const GbOptions& opts = {});

// Number of standard monomials of a zero-dimensional ideal.
template <class F>
std::uint64_t degree_zero_dim(const Ideal<F>& I, const GbOptions& opts = {});

// Degree of the top-dimensional part via random affine slices; two seeds must agree.
template <class F>
std::uint64_t degree_via_sections(const Ideal<F>& I, std::uint64_t seed, const GbOptions& opts = {});

// True iff f lies in the radical of I.
template <class F>
bool vanishes_on_variety(const Polynomial<F>& f, const Ideal<F>& I, const GbOptions& opts = {});

template <class F>
bool same_ideal(const Ideal<F>& A, const Ideal<F>& B, const GbOptions& opts = {});

}  // namespace optdeg
