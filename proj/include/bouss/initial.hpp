#ifndef BOUSS_INITIAL_HPP
#define BOUSS_INITIAL_HPP

#include "bouss/field.hpp"

#include <cstdint>

namespace bouss {

/// Periodized Gaussian bump A exp(-|x-x0|^2 / sigma^2), images summed over
/// the neighbouring boxes so the profile is smooth across the seam.
/// center and width are in units of L (center 0.5 puts the bump mid-box).
Field gaussian_field(const Grid& g, Real amplitude, Real center = 0.5, Real width = 1.0 / 32.0);

/// Seeded band-limited noise: white samples filtered by
/// (1 + |xi|^2)^{-decay/2} inside the dealiased band, zero mean, scaled to
/// max |value| = amplitude.
Field random_field(const Grid& g, Real amplitude, std::uint64_t seed, Real decay = 4.0);

/// A cos(xi_k . x) for an integer per-axis mode vector k.
Field single_mode_field(const Grid& g, Real amplitude, const std::array<int, 2>& mode);

/// Vector-field variants: independent components (random) or grad of the
/// scalar profile (curl-free by construction).
VectorField random_vector_field(const Grid& g, Real amplitude, std::uint64_t seed,
                                Real decay = 4.0);
VectorField gradient_bump_vector_field(const Grid& g, Real amplitude, Real center = 0.5,
                                       Real width = 1.0 / 32.0);

} // namespace bouss

#endif
