#ifndef BOUSS_GRID_HPP
#define BOUSS_GRID_HPP

#include <Eigen/Core>
#include <memory>
#include <stdexcept>

namespace bouss {

using Real = double;
using Complex = std::complex<double>;
using Array = Eigen::ArrayXd;   // physical samples, flattened row-major
using CArray = Eigen::ArrayXcd; // spectral coefficients, same layout

/// Periodic box descriptor plus per-mode wavevector tables.
///
/// The box is [0, L)^n sampled with N points per axis, N a power of two.
/// Two frequency tables are kept per axis: the full table, where bin N/2
/// carries the Nyquist frequency -pi*N/L, and the derivative table, where
/// that bin is zeroed so every odd-order multiplier maps real fields to
/// real fields. All multiplier calculus (gradient, divergence, Laplacian,
/// Helmholtz, Leray) uses the derivative table; Littlewood-Paley profiles
/// are tabulated against the full |xi|.
class Grid {
public:
    Grid(int dim, Real length, int points);

    int dim() const { return dim_; }
    Real length() const { return length_; }
    int points() const { return points_; }
    Eigen::Index modes() const { return modes_; }

    /// Mesh width L/N.
    Real cell() const { return length_ / points_; }
    /// Quadrature weight (L/N)^n of the trapezoid rule on the torus.
    Real quad_weight() const { return quad_w_; }
    /// Largest |xi| on the derivative table, i.e. after Nyquist removal.
    Real max_deriv_freq() const { return 2.0 * pi() * (points_ / 2 - 1) / length_; }
    /// Largest resolved |xi| (full table, corner mode in 2D).
    Real max_freq() const;
    /// Per-axis mode limit kept by the two-thirds rule.
    int dealias_limit() const { return dealias_limit_; }
    /// Largest |xi| surviving the dealias mask, per axis.
    Real dealias_freq() const { return 2.0 * pi() * dealias_limit_ / length_; }

    /// xi_i at flat mode index (derivative table, axis 0 or 1).
    const Array& axis_deriv(int axis) const;
    /// |xi|^2 at flat mode index, derivative table.
    const Array& freq_sq() const { return tables_->freq_sq; }
    /// |xi| at flat mode index, full table.
    const Array& freq_abs() const { return tables_->freq_abs; }
    /// 1.0/0.0 mask keeping |k_i| <= dealias_limit() on every axis.
    const Array& dealias_mask() const { return tables_->dealias; }

    /// Signed integer mode on one axis for FFT bin k.
    int signed_mode(int k) const { return k < points_ / 2 ? k : k - points_; }
    /// Physical coordinate of sample i on one axis.
    Real coord(int i) const { return length_ * i / points_; }

    bool operator==(const Grid& o) const
    {
        return dim_ == o.dim_ && points_ == o.points_ && length_ == o.length_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    static Real pi() { return 3.14159265358979323846; }

private:
    struct Tables {
        std::array<Array, 2> axis_deriv;
        Array freq_sq;
        Array freq_abs;
        Array dealias;
    };

    int dim_ = 1;
    Real length_ = 0;
    int points_ = 0;
    Eigen::Index modes_ = 0;
    Real quad_w_ = 0;
    int dealias_limit_ = 0;
    std::shared_ptr<const Tables> tables_; // shared so Grid copies stay cheap
};

/// Thrown when two operands live on different grids.
struct grid_mismatch : std::invalid_argument {
    grid_mismatch() : std::invalid_argument("fields live on different grids") {}
};

inline void require_same_grid(const Grid& a, const Grid& b)
{
    if (a != b) throw grid_mismatch{};
}

} // namespace bouss

#endif
