#pragma once

#include <string>
#include <string_view>

#include "optdeg/polynomial.hpp"

namespace optdeg {

// Grammar: integer literals and a/b literals, variables, + - * ^ with non-negative integer
// exponents, parentheses. No implicit multiplication.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring);

// As parse_polynomial, plus at most one top-level division num/den.
template <class F>
RationalFunction<F> parse_rational_function(std::string_view text, const RingPtr<F>& ring);

// Terms in ring order, leading term first; "0" for the zero polynomial.
template <class F>
std::string format_polynomial(const Polynomial<F>& p);

template <class F>
std::string format_rational_function(const RationalFunction<F>& r);

template <class F>
std::string format_element(const F& field, const typename F::Element& c);

}  // namespace optdeg
