#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "optdeg/error.hpp"
#include "optdeg/ring.hpp"

namespace optdeg {

template <class F>
struct Term {
    Monomial mono;
    typename F::Element coeff;
};

namespace detail {

// f + c * shift * g for term lists sorted by decreasing monomial; `shift` may be null (= 1).
template <class F>
std::vector<Term<F>> axpy(const F& field, const MonomialOrder& order, std::span<const Term<F>> f,
                          const typename F::Element& c, const Monomial* shift, std::span<const Term<F>> g) {
    std::vector<Term<F>> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    bool have_g = false;
    auto load_g = [&] {
        if (j < g.size()) {
            gm = shift ? mono_mul(g[j].mono, *shift) : g[j].mono;
            have_g = true;
        } else {
            have_g = false;
        }
    };
    load_g();
    while (i < f.size() && have_g) {
        int cmp = order.compare(f[i].mono, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, field.mul(c, g[j].coeff)});
            ++j;
            load_g();
        } else {
            auto s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
            if (!field.is_zero(s)) out.push_back({gm, std::move(s)});
            ++i;
            ++j;
            load_g();
        }
    }
    while (i < f.size()) out.push_back(f[i++]);
    while (have_g) {
        out.push_back({gm, field.mul(c, g[j].coeff)});
        ++j;
        load_g();
    }
    return out;
}

}  // namespace detail

/// Sparse multivariate polynomial; terms are kept strictly decreasing in the ring order
/// with no zero coefficients.
template <class F>
class Polynomial {
public:
    using Element = typename F::Element;
    using TermType = Term<F>;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    // Arbitrary term list; sorts and combines like terms.
    Polynomial(RingPtr<F> ring, std::vector<TermType> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    static Polynomial constant(RingPtr<F> ring, Element c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }
    static Polynomial constant(RingPtr<F> ring, std::int64_t c) {
        auto e = ring->field().from_int(c);
        return constant(std::move(ring), std::move(e));
    }
    static Polynomial variable(RingPtr<F> ring, std::size_t i) {
        Polynomial p(std::move(ring));
        Monomial m;
        m.set(i, 1);
        p.terms_.push_back({m, p.field().one()});
        return p;
    }
    static Polynomial variable(RingPtr<F> ring, const std::string& name) {
        auto i = ring->require(name);
        return variable(std::move(ring), i);
    }
    static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<TermType>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const { return is_constant() && !is_zero() && field().is_one(terms_[0].coeff); }

    const TermType& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Element& leading_coeff() const { return terms_.front().coeff; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.mono.degree));
        return d;
    }
    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
        return d;
    }
    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (const auto& t : terms_) s |= t.mono.support;
        return s;
    }
    bool uses_variable(std::size_t var) const { return (support() >> var) & 1u; }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree != terms_.front().mono.degree) return false;
        return true;
    }
    // Homogeneous in the variables selected by `mask`.
    bool is_homogeneous_in(std::uint32_t mask) const {
        auto partial = [&](const Monomial& m) {
            std::uint32_t d = 0;
            for (std::size_t i = 0; i < ring_->size(); ++i)
                if (mask >> i & 1u) d += m.exp[i];
            return d;
        };
        for (const auto& t : terms_)
            if (partial(t.mono) != partial(terms_.front().mono)) return false;
        return true;
    }

    Polynomial monic() const {
        if (is_zero() || field().is_one(leading_coeff())) return *this;
        return scaled(field().inv(leading_coeff()));
    }

    Polynomial scaled(const Element& c) const {
        Polynomial r(ring_);
        if (field().is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(c, t.coeff)});
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const Element& c) const {
        Polynomial r(ring_);
        if (field().is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), field().mul(c, t.coeff)});
        return r;
    }

    // this + c * m * g
    Polynomial axpy(const Element& c, const Monomial* m, const Polynomial& g) const {
        check_ring(g);
        Polynomial r(ring_);
        r.terms_ = detail::axpy<F>(field(), ring_->order(), terms_, c, m, g.terms_);
        return r;
    }

    Polynomial operator-() const { return scaled(field().neg(field().one())); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return a.axpy(a.field().one(), nullptr, b);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a.axpy(a.field().neg(a.field().one()), nullptr, b);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        // Accumulate row by row with merges; each row is already sorted.
        for (const auto& t : small.terms_)
            r.terms_ = detail::axpy<F>(a.field(), a.ring_->order(), r.terms_, t.coeff, &t.mono, large.terms_);
        return r;
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
            if (!a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
        }
        return true;
    }

    void check_ring(const Polynomial& other) const {
        if (ring_ != other.ring_ && !ring_->same_as(*other.ring_))
            throw Error(Errc::ring_mismatch, "polynomials belong to different rings");
    }

private:
    void normalize() {
        const auto& order = ring_->order();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const TermType& a, const TermType& b) { return order.compare(a.mono, b.mono) > 0; });
        std::vector<TermType> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = field().add(out.back().coeff, t.coeff);
            else
                out.push_back(std::move(t));
            if (field().is_zero(out.back().coeff)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<TermType> terms_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F>& base, unsigned k) {
    auto result = Polynomial<F>::constant(base.ring(), base.field().one());
    auto b = base;
    while (k) {
        if (k & 1u) result *= b;
        k >>= 1;
        if (k) b = b * b;
    }
    return result;
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p, std::size_t var) {
    std::vector<Term<F>> out;
    const auto& field = p.field();
    for (const auto& t : p.terms()) {
        auto e = t.mono.exp[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, static_cast<std::uint16_t>(e - 1));
        out.push_back({m, field.mul(field.from_int(e), t.coeff)});
    }
    return Polynomial<F>(p.ring(), std::move(out));
}

// Moves p into `target`; index_map[i] is the target index of source variable i, or -1 when
// that variable must not occur in p.
template <class F>
Polynomial<F> remap(const Polynomial<F>& p, const RingPtr<F>& target, const std::vector<int>& index_map) {
    std::vector<Term<F>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < p.ring()->size(); ++i) {
            if (!t.mono.exp[i]) continue;
            if (index_map[i] < 0)
                throw Error(Errc::undeclared_variable,
                            "variable '" + p.ring()->name(i) + "' does not exist in the target ring");
            m.set(static_cast<std::size_t>(index_map[i]), t.mono.exp[i]);
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial<F>(target, std::move(out));
}

// Moves p into `target`, matching variables by name.
template <class F>
Polynomial<F> embed(const Polynomial<F>& p, const RingPtr<F>& target) {
    if (p.ring() == target) return p;
    std::vector<int> map(p.ring()->size(), -1);
    for (std::size_t i = 0; i < p.ring()->size(); ++i)
        if (auto j = target->index_of(p.ring()->name(i))) map[i] = static_cast<int>(*j);
    return remap(p, target, map);
}

template <class F>
std::vector<Polynomial<F>> embed_all(const std::vector<Polynomial<F>>& ps, const RingPtr<F>& target) {
    std::vector<Polynomial<F>> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(embed(p, target));
    return out;
}

/// Images for bound variables; unbound variables map to the same-named variable of the target.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, const std::map<std::size_t, Polynomial<F>>& bindings,
                         const RingPtr<F>& target) {
    const auto& src = *p.ring();
    std::vector<Polynomial<F>> images(src.size());
    std::vector<bool> have(src.size(), false);
    for (const auto& [idx, img] : bindings) {
        if (idx >= src.size()) throw Error(Errc::undeclared_variable, "binding for an undeclared variable");
        images[idx] = embed(img, target);
        have[idx] = true;
    }
    const std::uint32_t used = p.support();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (have[i] || !(used >> i & 1u)) continue;
        images[i] = Polynomial<F>::variable(target, target->require(src.name(i)));
        have[i] = true;
    }
    // Power cache per variable.
    std::vector<std::vector<Polynomial<F>>> powers(src.size());
    auto power = [&](std::size_t var, unsigned e) -> const Polynomial<F>& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial<F>::constant(target, target->field().one()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };
    Polynomial<F> result(target);
    for (const auto& t : p.terms()) {
        auto term = Polynomial<F>::constant(target, t.coeff);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (t.mono.exp[i]) term = term * power(i, t.mono.exp[i]);
        result += term;
    }
    return result;
}

/// Specializes variables by name to field values, landing in the ring of the remaining variables.
template <class F>
Polynomial<F> specialize(const Polynomial<F>& p, const std::vector<std::pair<std::string, typename F::Element>>& values,
                         const RingPtr<F>& target) {
    std::map<std::size_t, Polynomial<F>> bindings;
    for (const auto& [name, value] : values)
        bindings.emplace(p.ring()->require(name), Polynomial<F>::constant(target, value));
    return substitute(p, bindings, target);
}

// Exact quotient a / b; throws invalid_argument when b does not divide a.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw Error(Errc::zero_denominator, "division by the zero polynomial");
    a.check_ring(b);
    const auto& field = a.field();
    const std::size_t n = a.ring()->size();
    auto rem = a;
    std::vector<Term<F>> quotient;
    const auto inv_lc = field.inv(b.leading_coeff());
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!divides(b.leading_monomial(), lt.mono, n))
            throw Error(Errc::invalid_argument, "polynomial division is not exact");
        Monomial q = mono_div(lt.mono, b.leading_monomial());
        auto c = field.mul(lt.coeff, inv_lc);
        quotient.push_back({q, c});
        rem = rem.axpy(field.neg(c), &q, b);
    }
    return Polynomial<F>(a.ring(), std::move(quotient));
}

/// num / den with den != 0. No cancellation is attempted beyond constant factors.
template <class F>
struct RationalFunction {
    Polynomial<F> num;
    Polynomial<F> den;

    RationalFunction() = default;
    RationalFunction(Polynomial<F> n, Polynomial<F> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error(Errc::zero_denominator, "rational function with zero denominator");
        if (den.is_constant() && !den.is_one()) {
            num = num.scaled(num.field().inv(den.leading_coeff()));
            den = Polynomial<F>::constant(den.ring(), den.field().one());
        }
    }
    explicit RationalFunction(Polynomial<F> n)
        : num(std::move(n)), den(Polynomial<F>::constant(num.ring(), num.field().one())) {}

    bool is_polynomial() const { return den.is_constant(); }
    bool is_zero() const { return num.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den == b.den) return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num.is_zero()) throw Error(Errc::zero_denominator, "division by a zero rational function");
        return {a.num * b.den, a.den * b.num};
    }
};

template <class F>
RationalFunction<F> derivative(const RationalFunction<F>& r, std::size_t var) {
    if (r.den.is_constant()) return RationalFunction<F>(derivative(r.num, var), r.den);
    return {derivative(r.num, var) * r.den - r.num * derivative(r.den, var), r.den * r.den};
}

template <class F>
RationalFunction<F> embed(const RationalFunction<F>& r, const RingPtr<F>& target) {
    return {embed(r.num, target), embed(r.den, target)};
}

}  // namespace optdeg
