#include <algorithm>
#include <limits>
#include <optional>

#include "optdeg/ideal.hpp"

namespace optdeg {
namespace {

// Terms stored in increasing order so the leading term sits at the back.
template <class F>
using Ascending = std::vector<Term<F>>;

template <class F>
Ascending<F> merge_ascending(const F& field, const MonomialOrder& order, const Ascending<F>& a, Ascending<F>&& b) {
    if (a.empty()) return std::move(b);
    if (b.empty()) return a;
    Ascending<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int cmp = order.compare(a[i].mono, b[j].mono);
        if (cmp < 0) {
            out.push_back(a[i++]);
        } else if (cmp > 0) {
            out.push_back(std::move(b[j++]));
        } else {
            auto s = field.add(a[i].coeff, b[j].coeff);
            if (!field.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(std::move(b[j++]));
    return out;
}

// Geometric bucket accumulator for long reduction chains.
template <class F>
class Geobucket {
public:
    Geobucket(const F& field, const MonomialOrder& order) : field_(field), order_(order) {}

    // Adds c * shift * g where g is in decreasing order.
    void add(const typename F::Element& c, const Monomial& shift, std::span<const Term<F>> g) {
        if (g.empty()) return;
        Ascending<F> scaled;
        scaled.reserve(g.size());
        const bool unit_shift = shift.is_one();
        const bool unit_coeff = field_.is_one(c);
        for (auto it = g.rbegin(); it != g.rend(); ++it)
            scaled.push_back({unit_shift ? it->mono : mono_mul(it->mono, shift),
                              unit_coeff ? it->coeff : field_.mul(c, it->coeff)});
        insert(std::move(scaled));
    }

    std::optional<Term<F>> pop_leading() {
        for (;;) {
            int best = -1;
            for (std::size_t i = 0; i < buckets_.size(); ++i) {
                if (buckets_[i].empty()) continue;
                if (best < 0 || order_.compare(buckets_[i].back().mono, buckets_[best].back().mono) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return std::nullopt;
            Term<F> lead = std::move(buckets_[best].back());
            buckets_[best].pop_back();
            for (std::size_t i = 0; i < buckets_.size(); ++i) {
                if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
                if (buckets_[i].back().mono == lead.mono) {
                    lead.coeff = field_.add(lead.coeff, buckets_[i].back().coeff);
                    buckets_[i].pop_back();
                }
            }
            if (!field_.is_zero(lead.coeff)) return lead;
        }
    }

private:
    static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }

    void insert(Ascending<F>&& terms) {
        std::size_t level = 0;
        while (capacity(level) < terms.size()) ++level;
        for (;;) {
            if (buckets_.size() <= level) buckets_.resize(level + 1);
            terms = merge_ascending(field_, order_, buckets_[level], std::move(terms));
            buckets_[level].clear();
            if (terms.size() <= capacity(level)) {
                buckets_[level] = std::move(terms);
                return;
            }
            ++level;
        }
    }

    const F& field_;
    const MonomialOrder& order_;
    std::vector<Ascending<F>> buckets_;
};

template <class F>
struct BasisElement {
    std::vector<Term<F>> terms;  // decreasing, monic
    std::uint32_t sugar = 0;
    bool active = true;

    const Monomial& lead() const { return terms.front().mono; }
    std::span<const Term<F>> tail() const { return std::span<const Term<F>>(terms).subspan(1); }
};

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
    std::uint64_t id;
};

template <class F>
class Buchberger {
public:
    Buchberger(RingPtr<F> ring, const GbOptions& opts)
        : ring_(std::move(ring)), field_(ring_->field()), order_(ring_->order()), nvars_(ring_->size()), opts_(opts) {}

    GroebnerBasis<F> run(const std::vector<Polynomial<F>>& gens) {
        std::vector<Polynomial<F>> input;
        for (const auto& g : gens)
            if (!g.is_zero()) input.push_back(embed(g, ring_));
        std::sort(input.begin(), input.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
            int c = order_.compare(a.leading_monomial(), b.leading_monomial());
            return c != 0 ? c < 0 : a.size() < b.size();
        });
        for (const auto& g : input) {
            if (g.is_constant()) return unit();
            Geobucket<F> bucket(field_, order_);
            bucket.add(field_.one(), Monomial{}, g.terms());
            std::uint32_t sugar = static_cast<std::uint32_t>(g.total_degree());
            auto h = reduce(bucket, sugar);
            if (h.empty()) continue;
            if (h.front().mono.is_one()) return unit();
            insert(std::move(h), sugar);
        }
        while (!pairs_.empty()) {
            auto pair = select();
            const auto& f = basis_[pair.i];
            const auto& g = basis_[pair.j];
            Geobucket<F> bucket(field_, order_);
            bucket.add(field_.one(), mono_div(pair.lcm, f.lead()), f.tail());
            bucket.add(field_.neg(field_.one()), mono_div(pair.lcm, g.lead()), g.tail());
            std::uint32_t sugar = pair.sugar;
            auto h = reduce(bucket, sugar);
            if (h.empty()) continue;
            if (h.front().mono.is_one()) return unit();
            insert(std::move(h), sugar);
        }
        return finish();
    }

private:
    GroebnerBasis<F> unit() const {
        return {ring_, {Polynomial<F>::constant(ring_, field_.one())}};
    }

    void count_step() {
        if (++steps_ > opts_.step_budget)
            throw Error(Errc::budget_exceeded,
                        "Groebner computation exceeded the step budget of " + std::to_string(opts_.step_budget));
    }

    const BasisElement<F>* find_reducer(const Monomial& m) const {
        const BasisElement<F>* best = nullptr;
        for (std::size_t k : active_) {
            const auto& b = basis_[k];
            if (!divides(b.lead(), m, nvars_)) continue;
            if (!best || b.terms.size() < best->terms.size()) best = &b;
        }
        return best;
    }

    // Full reduction against the active basis; result is monic and decreasing.
    std::vector<Term<F>> reduce(Geobucket<F>& bucket, std::uint32_t& sugar) {
        std::vector<Term<F>> out;
        while (auto lt = bucket.pop_leading()) {
            const auto* r = find_reducer(lt->mono);
            if (!r) {
                out.push_back(std::move(*lt));
                continue;
            }
            count_step();
            Monomial q = mono_div(lt->mono, r->lead());
            sugar = std::max(sugar, r->sugar + q.degree);
            bucket.add(field_.neg(lt->coeff), q, r->tail());
        }
        if (!out.empty() && !field_.is_one(out.front().coeff)) {
            auto inv = field_.inv(out.front().coeff);
            for (auto& t : out) t.coeff = field_.mul(inv, t.coeff);
        }
        return out;
    }

    // Gebauer-Möller update.
    void insert(std::vector<Term<F>> terms, std::uint32_t sugar) {
        const std::size_t h = basis_.size();
        basis_.push_back({std::move(terms), sugar, true});
        const Monomial lh = basis_[h].lead();

        struct Candidate {
            std::size_t g;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Candidate> cands;
        for (std::size_t g : active_) cands.push_back({g, mono_lcm(basis_[g].lead(), lh), coprime(basis_[g].lead(), lh)});

        // Chain criterion among the new pairs, processed in order: (g,h) is dropped when a pending or
        // already kept pair has an lcm dividing its own. Coprime pairs are kept here and discarded below.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].coprime) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (divides(cands[b].lcm, cands[a].lcm, nvars_)) {
                    cands[a].keep = false;
                    break;
                }
            }
        }

        // Old pairs made redundant by h.
        std::erase_if(pairs_, [&](const CriticalPair& p) {
            if (!divides(lh, p.lcm, nvars_)) return false;
            auto li = mono_lcm(basis_[p.i].lead(), lh);
            auto lj = mono_lcm(basis_[p.j].lead(), lh);
            return !(li == p.lcm) && !(lj == p.lcm);
        });

        for (const auto& c : cands) {
            if (!c.keep || c.coprime) continue;
            const auto& g = basis_[c.g];
            std::uint32_t s = std::max(g.sugar + (c.lcm.degree - g.lead().degree), sugar + (c.lcm.degree - lh.degree));
            pairs_.push_back({c.g, h, c.lcm, s, next_id_++});
        }

        std::erase_if(active_, [&](std::size_t g) {
            if (divides(lh, basis_[g].lead(), nvars_)) {
                basis_[g].active = false;
                return true;
            }
            return false;
        });
        active_.push_back(h);
    }

    CriticalPair select() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const auto& a = pairs_[k];
            const auto& b = pairs_[best];
            bool better;
            if (opts_.selection == PairSelection::sugar && a.sugar != b.sugar) {
                better = a.sugar < b.sugar;
            } else {
                int c = order_.compare(a.lcm, b.lcm);
                better = c != 0 ? c < 0 : a.id < b.id;
            }
            if (better) best = k;
        }
        auto p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        return p;
    }

    GroebnerBasis<F> finish() {
        std::vector<std::size_t> keep = active_;
        std::sort(keep.begin(), keep.end(),
                  [&](std::size_t a, std::size_t b) { return order_.compare(basis_[a].lead(), basis_[b].lead()) < 0; });
        GroebnerBasis<F> out{ring_, {}};
        for (std::size_t k : keep) {
            // Tail reduction against the other minimal elements; the leading term is fixed.
            auto& e = basis_[k];
            Geobucket<F> bucket(field_, order_);
            bucket.add(field_.one(), Monomial{}, e.tail());
            std::vector<Term<F>> terms{e.terms.front()};
            while (auto lt = bucket.pop_leading()) {
                const BasisElement<F>* r = nullptr;
                for (std::size_t o : keep)
                    if (divides(basis_[o].lead(), lt->mono, nvars_)) {
                        r = &basis_[o];
                        break;
                    }
                if (!r) {
                    terms.push_back(std::move(*lt));
                    continue;
                }
                count_step();
                bucket.add(field_.neg(lt->coeff), mono_div(lt->mono, r->lead()), r->tail());
            }
            out.basis.emplace_back(ring_, std::move(terms));
        }
        return out;
    }

    RingPtr<F> ring_;
    const F& field_;
    const MonomialOrder& order_;
    std::size_t nvars_;
    GbOptions opts_;
    std::vector<BasisElement<F>> basis_;
    std::vector<std::size_t> active_;
    std::vector<CriticalPair> pairs_;
    std::uint64_t next_id_ = 0;
    std::uint64_t steps_ = 0;
};

template <class F>
RingPtr<F> grevlex_ring(const RingPtr<F>& ring) {
    if (ring->order_spec().kind == MonomialOrderSpec::Kind::grevlex) return ring;
    return ring->with_order(MonomialOrderSpec::grevlex());
}

template <class F>
GroebnerBasis<F> grevlex_basis(const Ideal<F>& I, const GbOptions& opts) {
    if (I.ring()->order_spec().kind == MonomialOrderSpec::Kind::grevlex) return groebner_basis(I, opts);
    return groebner_basis(I, MonomialOrderSpec::grevlex(), opts);
}

// Largest set of variables S such that no leading monomial is supported inside S.
int max_independent_set(const std::vector<std::uint32_t>& supports, std::size_t nvars) {
    int best = 0;
    auto blocked = [&](std::uint32_t set) {
        for (auto s : supports)
            if ((s & ~set) == 0) return true;
        return false;
    };
    auto dfs = [&](auto&& self, std::size_t var, std::uint32_t set, int size) -> void {
        if (size + static_cast<int>(nvars - var) <= best) return;
        if (var == nvars) {
            best = size;
            return;
        }
        std::uint32_t with = set | (1u << var);
        if (!blocked(with)) self(self, var + 1, with, size + 1);
        self(self, var + 1, set, size);
    };
    dfs(dfs, 0, 0u, 0);
    return best;
}

}  // namespace

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const GbOptions& opts) {
    if (I.known_reduced()) return {I.ring(), I.generators()};
    return Buchberger<F>(I.ring(), opts).run(I.generators());
}

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const MonomialOrderSpec& order, const GbOptions& opts) {
    if (I.ring()->order_spec() == order) return groebner_basis(I, opts);
    auto ring = I.ring()->with_order(order);
    return Buchberger<F>(ring, opts).run(embed_all(I.generators(), ring));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    auto p = embed(f, G.ring);
    const auto& field = G.ring->field();
    const auto& order = G.ring->order();
    const std::size_t n = G.ring->size();
    Geobucket<F> bucket(field, order);
    bucket.add(field.one(), Monomial{}, p.terms());
    std::vector<Term<F>> out;
    while (auto lt = bucket.pop_leading()) {
        const Polynomial<F>* r = nullptr;
        for (const auto& g : G.basis)
            if (divides(g.leading_monomial(), lt->mono, n)) {
                r = &g;
                break;
            }
        if (!r) {
            out.push_back(std::move(*lt));
            continue;
        }
        auto c = field.div(lt->coeff, r->leading_coeff());
        bucket.add(field.neg(c), mono_div(lt->mono, r->leading_monomial()),
                   std::span<const Term<F>>(r->terms()).subspan(1));
    }
    return Polynomial<F>(G.ring, std::move(out));
}

template <class F>
bool contains(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opts) {
    if (f.is_zero()) return true;
    return normal_form(f, groebner_basis(I, opts)).is_zero();
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop, const GbOptions& opts) {
    const auto& ring = I.ring();
    if (drop.empty()) return I;
    std::uint32_t drop_mask = 0;
    for (const auto& v : drop) drop_mask |= 1u << ring->require(v);
    std::vector<std::string> keep;
    std::vector<int> index_map(ring->size(), -1);
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (drop_mask >> i & 1u) continue;
        index_map[i] = static_cast<int>(keep.size());
        keep.push_back(ring->name(i));
    }
    if (keep.empty()) throw Error(Errc::invalid_argument, "cannot eliminate every variable");
    const bool lex = ring->order_spec().kind == MonomialOrderSpec::Kind::lex;
    auto sub = Ring<F>::make(ring->field(), keep, lex ? MonomialOrderSpec::lex() : MonomialOrderSpec::grevlex());

    std::vector<std::string> front;
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (drop_mask >> i & 1u) front.push_back(ring->name(i));
    auto G = groebner_basis(I, MonomialOrderSpec::block(front), opts);
    if (G.is_unit()) return Ideal<F>::unit(sub);
    Ideal<F> out(sub);
    for (const auto& g : G.basis)
        if ((g.support() & drop_mask) == 0) out.add(remap(g, sub, index_map));
    // The block order restricted to the kept variables is grevlex, so the survivors are reduced there.
    if (!lex) out.mark_reduced();
    return out;
}

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f_in, const GbOptions& opts) {
    const auto& ring = I.ring();
    auto f = embed(f_in, ring);
    if (f.is_zero()) return Ideal<F>::unit(ring);
    if (f.is_constant()) return I;
    auto G = groebner_basis(I, opts);
    if (G.is_unit()) return G.ideal();
    if (normal_form(f, G).is_zero()) return Ideal<F>::unit(ring);
    const auto w = ring->fresh_name("w");
    auto ext = ring->extended({w}, MonomialOrderSpec::grevlex());
    Ideal<F> J(ext, embed_all(G.basis, ext));
    auto wf = Polynomial<F>::variable(ext, ext->size() - 1) * embed(f, ext);
    J.add(Polynomial<F>::constant(ext, ext->field().one()) - wf);
    auto out = eliminate(J, {w}, opts);
    // eliminate() lands in a fresh ring with the same variables; restore the caller's ring.
    if (ring->order_spec().kind == MonomialOrderSpec::Kind::grevlex) {
        Ideal<F> back(ring, out.generators());
        back.mark_reduced();
        return back;
    }
    return Ideal<F>(ring, out.generators());
}

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opts) {
    const auto& ring = I.ring();
    auto GJ = groebner_basis(Ideal<F>(ring, J.generators()), opts);
    if (GJ.is_zero()) return Ideal<F>::unit(ring);
    if (GJ.is_unit()) return I;
    auto GI = groebner_basis(I, opts);
    if (GI.is_unit()) return GI.ideal();
    if (groebner_basis(GI.ideal() + GJ.ideal(), opts).is_unit()) return GI.ideal();
    std::optional<Ideal<F>> acc;
    for (const auto& f : GJ.basis) {
        if (normal_form(f, GI).is_zero()) continue;
        auto s = saturate(GI.ideal(), f, opts);
        acc = acc ? intersect(*acc, s, opts) : s;
    }
    if (!acc) return Ideal<F>::unit(ring);
    return *acc;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& A, const Ideal<F>& B, const GbOptions& opts) {
    const auto& ring = A.ring();
    auto GA = groebner_basis(A, opts);
    auto GB = groebner_basis(Ideal<F>(ring, B.generators()), opts);
    if (GA.is_unit()) return GB.ideal();
    if (GB.is_unit()) return GA.ideal();
    if (GA.is_zero() || GB.is_zero()) return Ideal<F>(ring);
    const auto t = ring->fresh_name("t");
    auto ext = ring->extended({t}, MonomialOrderSpec::grevlex());
    auto tv = Polynomial<F>::variable(ext, ext->size() - 1);
    auto one_minus_t = Polynomial<F>::constant(ext, ext->field().one()) - tv;
    Ideal<F> J(ext);
    for (const auto& a : GA.basis) J.add(tv * embed(a, ext));
    for (const auto& b : GB.basis) J.add(one_minus_t * embed(b, ext));
    auto out = eliminate(J, {t}, opts);
    Ideal<F> back(ring, out.generators());
    if (ring->order_spec().kind == MonomialOrderSpec::Kind::grevlex) back.mark_reduced();
    return back;
}

template <class F>
int dimension(const Ideal<F>& I, const GbOptions& opts) {
    auto G = grevlex_basis(I, opts);
    if (G.is_unit()) return -1;
    std::vector<std::uint32_t> supports;
    for (const auto& g : G.basis) supports.push_back(g.leading_monomial().support);
    return max_independent_set(supports, G.ring->size());
}

template <class F>
std::uint64_t degree_zero_dim(const Ideal<F>& I, const GbOptions& opts) {
    auto G = grevlex_basis(I, opts);
    if (G.is_unit()) return 0;
    const std::size_t n = G.ring->size();
    std::vector<std::uint32_t> supports;
    std::vector<Monomial> leads;
    for (const auto& g : G.basis) {
        supports.push_back(g.leading_monomial().support);
        leads.push_back(g.leading_monomial());
    }
    if (max_independent_set(supports, n) != 0)
        throw Error(Errc::not_zero_dimensional, "ideal is not zero-dimensional");
    auto reducible = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (divides(l, m, n)) return true;
        return false;
    };
    Monomial m;
    auto count = [&](auto&& self, std::size_t var) -> std::uint64_t {
        if (var == n) return 1;
        std::uint64_t total = 0;
        for (std::uint16_t e = 0;; ++e) {
            m.set(var, e);
            if (reducible(m)) break;
            total += self(self, var + 1);
        }
        m.set(var, 0);
        return total;
    };
    return count(count, 0);
}

template <class F>
std::uint64_t degree_via_sections(const Ideal<F>& I, std::uint64_t seed, const GbOptions& opts) {
    const auto& ring = I.ring();
    const int k = dimension(I, opts);
    if (k < 0) return 0;
    auto slice_count = [&](std::uint64_t s) {
        Rng rng(s);
        Ideal<F> J(ring, I.generators());
        for (int i = 0; i < k; ++i) {
            auto form = Polynomial<F>::constant(ring, uniform_int(rng, -100, 100));
            for (std::size_t v = 0; v < ring->size(); ++v)
                form += Polynomial<F>::variable(ring, v).scaled(ring->field().from_int(uniform_int(rng, -100, 100)));
            J.add(std::move(form));
        }
        try {
            return degree_zero_dim(J, opts);
        } catch (const Error& e) {
            if (e.code() != Errc::not_zero_dimensional) throw;
            throw Error(Errc::not_zero_dimensional_after_slicing,
                        "ideal is not zero-dimensional after " + std::to_string(k) + " random slices");
        }
    };
    const auto first = slice_count(derive_seed(seed, 1));
    const auto second = slice_count(derive_seed(seed, 2));
    if (first != second)
        throw Error(Errc::inconsistent_slices, "slice counts disagree: " + std::to_string(first) + " vs " +
                                                   std::to_string(second));
    return first;
}

template <class F>
bool vanishes_on_variety(const Polynomial<F>& f_in, const Ideal<F>& I, const GbOptions& opts) {
    const auto& ring = I.ring();
    auto f = embed(f_in, ring);
    if (f.is_zero()) return true;
    auto G = groebner_basis(I, opts);
    if (G.is_unit() || normal_form(f, G).is_zero()) return true;
    if (f.is_constant()) return false;
    const auto w = ring->fresh_name("w");
    auto ext = ring->extended({w}, MonomialOrderSpec::grevlex());
    Ideal<F> J(ext, embed_all(G.basis, ext));
    J.add(Polynomial<F>::constant(ext, ext->field().one()) - Polynomial<F>::variable(ext, ext->size() - 1) * embed(f, ext));
    return groebner_basis(J, opts).is_unit();
}

template <class F>
bool same_ideal(const Ideal<F>& A, const Ideal<F>& B, const GbOptions& opts) {
    auto ga = grevlex_basis(A, opts);
    auto gb = grevlex_basis(Ideal<F>(A.ring(), B.generators()), opts);
    if (ga.basis.size() != gb.basis.size()) return false;
    for (std::size_t i = 0; i < ga.basis.size(); ++i)
        if (!(ga.basis[i] == embed(gb.basis[i], ga.ring))) return false;
    return true;
}

#define OPTDEG_INSTANTIATE(F)                                                                               \
    template GroebnerBasis<F> groebner_basis<F>(const Ideal<F>&, const GbOptions&);                        \
    template GroebnerBasis<F> groebner_basis<F>(const Ideal<F>&, const MonomialOrderSpec&, const GbOptions&); \
    template Polynomial<F> normal_form<F>(const Polynomial<F>&, const GroebnerBasis<F>&);                 \
    template bool contains<F>(const Ideal<F>&, const Polynomial<F>&, const GbOptions&);                   \
    template Ideal<F> eliminate<F>(const Ideal<F>&, const std::vector<std::string>&, const GbOptions&);   \
    template Ideal<F> saturate<F>(const Ideal<F>&, const Polynomial<F>&, const GbOptions&);               \
    template Ideal<F> saturate<F>(const Ideal<F>&, const Ideal<F>&, const GbOptions&);                    \
    template Ideal<F> intersect<F>(const Ideal<F>&, const Ideal<F>&, const GbOptions&);                   \
    template int dimension<F>(const Ideal<F>&, const GbOptions&);                                          \
    template std::uint64_t degree_zero_dim<F>(const Ideal<F>&, const GbOptions&);                          \
    template std::uint64_t degree_via_sections<F>(const Ideal<F>&, std::uint64_t, const GbOptions&);       \
    template bool vanishes_on_variety<F>(const Polynomial<F>&, const Ideal<F>&, const GbOptions&);        \
    template bool same_ideal<F>(const Ideal<F>&, const Ideal<F>&, const GbOptions&);

OPTDEG_INSTANTIATE(PrimeField)
OPTDEG_INSTANTIATE(RationalField)

}  // namespace optdeg
