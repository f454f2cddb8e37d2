#ifndef BOUSS_DYADIC_HPP
#define BOUSS_DYADIC_HPP

#include "bouss/spectral.hpp"

#include <vector>

namespace bouss {

/// Nonhomogeneous dyadic partition of unity tabulated on a grid.
///
/// chi is a smooth radial cutoff equal to 1 on B(0,3/4) and supported in
/// B(0,4/3); the annular profile is the telescoping difference
/// phi(xi) = chi(xi/2) - chi(xi), supported in {3/4 <= |xi| <= 8/3}. By
/// construction chi(xi) + sum_{j=0..J} phi(2^-j xi) = chi(2^-(J+1) xi),
/// which equals 1 on every resolved mode once J reaches j_max().
class DyadicPartition {
public:
    explicit DyadicPartition(const Grid& grid);

    const Grid& grid() const { return grid_; }
    int j_min() const { return -1; }
    int j_max() const { return j_max_; }
    /// Number of active blocks, j = -1 .. j_max.
    int block_count() const { return j_max_ + 2; }

    /// Radial profiles evaluated at |xi| = rho.
    static Real chi(Real rho);
    static Real phi(Real rho) { return chi(rho / 2) - chi(rho); }

    /// Per-mode weight of block j (j = -1 is the chi block).
    const Array& block_weight(int j) const;
    /// Per-mode weight of the low-pass S_j = chi(2^{-j} xi).
    Array low_pass_weight(int j) const;

private:
    Grid grid_;
    int j_max_ = 0;
    std::vector<Array> w_; // block -1, 0, ..., j_max
};

DyadicPartition build_partition(const Grid& grid);

/// Delta_j u; j in [-2, j_max], with Delta_{-2} = 0.
Field dyadic_block(const DyadicPartition& p, const Field& u, int j);
/// S_j u = sum_{k <= j-1} Delta_k u.
Field low_pass(const DyadicPartition& p, const Field& u, int j);

/// ell^r aggregation over block indices; r in [1, inf].
Real ell_r(const std::vector<Real>& terms, Real r);

/// Besov norm ||u||_{B^s_{2,r}} = || 2^{js} ||Delta_j u||_L2 ||_{ell^r}.
Real besov_norm(const DyadicPartition& p, const Field& u, Real s, Real r);
/// Vector fields use the vector L2 norm inside each block.
Real besov_norm(const DyadicPartition& p, const VectorField& u, Real s, Real r);

/// Per-block L2 norms of a spectrum with an extra |xi|^{grad_order} weight:
/// grad_order = 1 gives the blocks of the gradient, 2 of the Hessian.
/// Entry 0 is block -1.
std::vector<Real> block_norms(const DyadicPartition& p, const CArray& coeff, int grad_order);
/// Same, accumulating several spectra (components of a vector field).
std::vector<Real> block_norms(const DyadicPartition& p, const std::vector<CArray>& coeffs,
                              int grad_order);

Real besov_from_blocks(const std::vector<Real>& norms, Real s, Real r);

/// Commutator audit for R_j = Delta_j(u d1 v) - u Delta_j(d1 v):
/// returns ||(2^{js}||R_j||)||_{ell^r} / (||grad u||_{B^{s-1}} ||v||_{B^s}),
/// with the convention that a vanishing denominator gives 0.
Real commutator_ratio(const DyadicPartition& p, const Field& u, const Field& v, Real s, Real r);

} // namespace bouss

#endif
