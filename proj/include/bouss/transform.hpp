#ifndef BOUSS_TRANSFORM_HPP
#define BOUSS_TRANSFORM_HPP

#include "bouss/grid.hpp"

namespace bouss {

/// Forward transform: normalized Fourier coefficients c_k = DFT(u)/N^n,
/// so c_0 is the mean of the samples.
CArray forward(const Grid& g, const Array& samples);

/// Inverse of forward(); returns the real part of the synthesis
/// (coefficients produced from real data are conjugate-symmetric, the
/// imaginary residue is roundoff).
Array backward(const Grid& g, const CArray& coeff);

/// In-place unnormalized axis transforms used by forward/backward.
void fft_all_axes(const Grid& g, CArray& data, bool inverse);

} // namespace bouss

#endif
