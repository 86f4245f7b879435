#pragma once

#include <stdexcept>
#include <string>

namespace lenspec {

// Base for everything this library throws on bad input or broken premises.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-shaped problems (bad parameters, malformed text).  The CLI maps
// these to a distinct exit code.
struct input_error : error {
    using error::error;
};

struct zero_denominator : input_error {
    zero_denominator() : input_error("denominator is the zero polynomial") {}
};

// series_expand on a denominator whose constant term vanishes beyond the
// declared z-power prefactor.
struct non_expandable : error {
    using error::error;
};

// A symmetric cyclotomic sum reduced to something outside Q; indicates a
// symmetry bug in the caller's term.
struct not_rational : error {
    using error::error;
};

struct dimension_mismatch : input_error {
    using input_error::input_error;
};

struct order_mismatch : input_error {
    using input_error::input_error;
};

struct not_a_divisor : input_error {
    using input_error::input_error;
};

// Brute-force enumeration guard exceeded, or a DP bound that the exact
// counting path cannot honor.
struct too_large : input_error {
    using input_error::input_error;
};

// Filtration level requested for a lens space outside the applicable
// (prime q, q-1 = 2n+4) regime.
struct not_applicable : input_error {
    using input_error::input_error;
};

struct not_lens_space : input_error {
    using input_error::input_error;
};

} // namespace lenspec
