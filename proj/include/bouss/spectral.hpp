#ifndef BOUSS_SPECTRAL_HPP
#define BOUSS_SPECTRAL_HPP

#include "bouss/field.hpp"

#include <functional>

namespace bouss {

/// Scale every spectral coefficient by symbol[k]. The table is indexed by
/// flat mode and must be finite everywhere; real output needs the usual
/// conjugate symmetry of the symbol (real even / imaginary odd in xi).
Field apply_multiplier(const Field& f, const CArray& symbol);
Field apply_multiplier(const Field& f, const Array& symbol);

/// Tabulate a symbol from a callable on the wavevector. The callable
/// receives (xi_0, ..., xi_{n-1}) through a pointer to n reals taken from
/// the derivative table.
CArray symbol_table(const Grid& g, const std::function<Complex(const Real*)>& fn);

VectorField gradient(const Field& f);
Field divergence(const VectorField& v);
Field laplacian(const Field& f);

/// Scalar curl in 2D: d1 V^2 - d2 V^1. Zero field in 1D.
Field curl(const VectorField& v);

/// (I - coeff*Laplacian)^{-1}, multiplier 1/(1 + coeff*|xi|^2).
Field helmholtz_invert(const Field& f, Real coeff);

/// Leray projection onto divergence-free fields; the zero mode passes
/// through unchanged (constants are divergence-free). In 1D this reduces
/// to extraction of the mean.
VectorField leray_project(const VectorField& v);

/// Two-thirds rule: zero the top third of the modes on every axis.
Field dealias(const Field& f);
VectorField dealias(const VectorField& v);

// --- spectral-space building blocks (hot paths keep coefficients) ------

inline CArray deriv_spec(const Grid& g, const CArray& c, int axis)
{
    return c * g.axis_deriv(axis).cast<Complex>() * Complex(0, 1);
}

/// Spectrum of the gradient component: i*xi_axis * c.
inline CArray grad_comp_spec(const Grid& g, const CArray& c, int axis)
{
    return deriv_spec(g, c, axis);
}

/// Parseval L2 norm of a spectrum: L^{n/2} * ||c||_2.
inline Real spectral_norm_l2(const Grid& g, const CArray& c)
{
    return std::sqrt(std::pow(g.length(), g.dim()) * c.abs2().sum());
}

} // namespace bouss

#endif
