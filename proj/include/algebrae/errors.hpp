#pragma once

#include <stdexcept>
#include <string>

namespace algebrae {

// Root of the library's error hierarchy. Domain failures (singular points,
// zero divisors, degenerate spans, ...) all derive from this; malformed
// arguments use bad_argument.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct bad_argument : error {
    using error::error;
};

struct algebra_mismatch : error {
    using error::error;
};

struct space_mismatch : error {
    using error::error;
};

struct not_a_unit : error {
    using error::error;
};

struct bad_point : error {
    using error::error;
};

struct singular_point : error {
    using error::error;
};

struct base_mismatch : error {
    using error::error;
};

struct degenerate_span : error {
    using error::error;
};

struct isotropic_base : error {
    using error::error;
};

struct zero_tance : error {
    using error::error;
};

struct zero_tangent : error {
    using error::error;
};

struct degenerate_plane : error {
    using error::error;
};

}  // namespace algebrae
