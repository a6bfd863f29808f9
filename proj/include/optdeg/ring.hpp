#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "optdeg/error.hpp"
#include "optdeg/field.hpp"
#include "optdeg/monomial.hpp"

namespace optdeg {

template <class F>
class Ring;

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

/// Polynomial ring F[v_1, ..., v_n] with a fixed monomial order. Immutable; shared by pointer.
template <class F>
class Ring {
public:
    Ring(F field, std::vector<std::string> names, MonomialOrderSpec order = MonomialOrderSpec::grevlex())
        : field_(std::move(field)), names_(std::move(names)), order_spec_(std::move(order)) {
        if (names_.empty()) throw Error(Errc::invalid_argument, "a ring needs at least one variable");
        if (names_.size() > kMaxVariables)
            throw Error(Errc::invalid_argument, "at most " + std::to_string(kMaxVariables) + " variables supported");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_)
            if (!seen.insert(n).second) throw Error(Errc::invalid_argument, "duplicate variable '" + n + "'");
        std::uint32_t mask = 0;
        if (order_spec_.kind == MonomialOrderSpec::Kind::block) {
            if (order_spec_.front.empty()) throw Error(Errc::invalid_argument, "block order needs a front block");
            for (const auto& v : order_spec_.front) {
                auto idx = index_of(v);
                if (!idx) throw Error(Errc::undeclared_variable, "block order variable '" + v + "' not in ring");
                mask |= 1u << *idx;
            }
        }
        order_ = MonomialOrder(order_spec_.kind, names_.size(), mask);
    }

    static RingPtr<F> make(F field, std::vector<std::string> names,
                           MonomialOrderSpec order = MonomialOrderSpec::grevlex()) {
        return std::make_shared<const Ring>(std::move(field), std::move(names), std::move(order));
    }

    const F& field() const { return field_; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const MonomialOrder& order() const { return order_; }
    const MonomialOrderSpec& order_spec() const { return order_spec_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t require(const std::string& name) const {
        auto idx = index_of(name);
        if (!idx) throw Error(Errc::undeclared_variable, "undeclared variable '" + name + "'");
        return *idx;
    }

    RingPtr<F> with_order(MonomialOrderSpec order) const { return make(field_, names_, std::move(order)); }

    // Appends fresh variables; block orders degrade to grevlex in the extension.
    RingPtr<F> extended(const std::vector<std::string>& extra, MonomialOrderSpec order = MonomialOrderSpec::grevlex()) const {
        auto all = names_;
        all.insert(all.end(), extra.begin(), extra.end());
        return make(field_, std::move(all), std::move(order));
    }

    // A variable name not yet used in this ring, derived from `stem`.
    std::string fresh_name(const std::string& stem) const {
        if (!index_of(stem)) return stem;
        for (int k = 0;; ++k) {
            auto candidate = stem + "_" + std::to_string(k);
            if (!index_of(candidate)) return candidate;
        }
    }

    bool same_as(const Ring& other) const {
        return this == &other ||
               (names_ == other.names_ && order_spec_ == other.order_spec_ && field_ == other.field_);
    }

private:
    F field_;
    std::vector<std::string> names_;
    MonomialOrderSpec order_spec_;
    MonomialOrder order_;
};

}  // namespace optdeg
