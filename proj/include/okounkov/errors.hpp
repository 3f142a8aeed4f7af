#pragma once

/**
 * @file errors.hpp
 * @brief Error taxonomy.
 *
 * Three families matter to callers (the CLI maps them to exit codes):
 * input/usage faults, resource-cap faults (a larger bound or resolution
 * would succeed), and computation faults discovered mid-pipeline.
 */

#include <stdexcept>
#include <string>

namespace okounkov {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / usage faults -------------------------------------------------

struct dimension_mismatch : error {
    using error::error;
};
struct empty_input : error {
    using error::error;
};
struct negative_entry : error {
    using error::error;
};
struct zero_degree_generator : error {
    using error::error;
};
struct bound_too_small : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};
struct not_full_dimensional : error {
    using error::error;
};
struct non_integral_direction : error {
    using error::error;
};
struct barycentric_failure : error {
    using error::error;
};
struct empty_polytope : error {
    using error::error;
};
struct empty_cone : error {
    using error::error;
};
struct empty_ray : error {
    using error::error;
};

// --- resource caps ----------------------------------------------------------

/// A query needs graded pieces beyond the materialization bound B; rebuilding
/// with a larger bound would succeed. Never silently approximated.
struct beyond_bound : error {
    using error::error;
};
/// The doubling refinement schedule passed N_max without meeting the
/// oscillation target.
struct resolution_exceeded : error {
    using error::error;
};

// --- computation faults -----------------------------------------------------

/// A direction outside the interior of the support: the full volume vanishes
/// and ratios are undefined.
struct zero_volume : error {
    using error::error;
};
/// A cone fiber with a recession direction; the bounded polytope type cannot
/// represent it. Unreachable for semigroup cones, kept for raw cone inputs.
struct unbounded_fiber : error {
    using error::error;
};
/// Cross-validation failure inside the geometry kernel; indicates a bug, not
/// bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace okounkov
