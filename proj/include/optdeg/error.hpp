#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optdeg {

enum class Errc {
    syntax,
    undeclared_variable,
    negative_exponent,
    zero_denominator,
    ring_mismatch,
    size_out_of_range,
    budget_exceeded,
    not_zero_dimensional,
    not_zero_dimensional_after_slicing,
    inconsistent_slices,
    positive_dimensional_fiber,
    denominator_vanishes_on_x,
    not_homogeneous,
    contained_in_isotropic,
    collapsed_to_unit,
    not_principal,
    zero_alpha,
    restriction_ill_defined,
    length_mismatch,
    invalid_argument,
    schema,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; `code()` identifies the error class.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(Errc::syntax, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace optdeg
