#include "bouss/grid.hpp"

#include <cmath>

namespace bouss {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

Grid::Grid(int dim, Real length, int points)
    : dim_(dim), length_(length), points_(points)
{
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("grid dimension must be 1 or 2");
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid length must be positive and finite");
    if (points < 8 || !power_of_two(points))
        throw std::invalid_argument("grid points per axis must be a power of two >= 8");

    modes_ = 1;
    for (int i = 0; i < dim_; ++i) modes_ *= points_;
    quad_w_ = std::pow(length_ / points_, dim_);
    // keep |k| <= ceil(N/3)-1: strictly alias-free for quadratic products
    dealias_limit_ = (points_ + 2) / 3 - 1;

    auto t = std::make_shared<Tables>();
    const Real base = 2.0 * pi() / length_;

    Array full(points_), deriv(points_);
    for (int k = 0; k < points_; ++k) {
        const int sk = signed_mode(k);
        full[k] = base * sk;
        deriv[k] = (k == points_ / 2) ? 0.0 : base * sk;
    }

    t->freq_sq.resize(modes_);
    t->freq_abs.resize(modes_);
    t->dealias.resize(modes_);
    if (dim_ == 1) {
        t->axis_deriv[0] = deriv;
        t->freq_sq = deriv.square();
        t->freq_abs = full.abs();
        for (int k = 0; k < points_; ++k)
            t->dealias[k] = std::abs(signed_mode(k)) <= dealias_limit_ ? 1.0 : 0.0;
    } else {
        t->axis_deriv[0].resize(modes_);
        t->axis_deriv[1].resize(modes_);
        for (int k0 = 0; k0 < points_; ++k0) {
            for (int k1 = 0; k1 < points_; ++k1) {
                const Eigen::Index idx = static_cast<Eigen::Index>(k0) * points_ + k1;
                t->axis_deriv[0][idx] = deriv[k0];
                t->axis_deriv[1][idx] = deriv[k1];
                t->freq_sq[idx] = deriv[k0] * deriv[k0] + deriv[k1] * deriv[k1];
                t->freq_abs[idx] = std::hypot(full[k0], full[k1]);
                const bool keep = std::abs(signed_mode(k0)) <= dealias_limit_ &&
                                  std::abs(signed_mode(k1)) <= dealias_limit_;
                t->dealias[idx] = keep ? 1.0 : 0.0;
            }
        }
    }
    tables_ = std::move(t);
}

Real Grid::max_freq() const
{
    const Real axis_max = pi() * points_ / length_;
    return dim_ == 1 ? axis_max : axis_max * std::sqrt(2.0);
}

const Array& Grid::axis_deriv(int axis) const
{
    if (axis < 0 || axis >= dim_)
        throw std::invalid_argument("axis out of range");
    return tables_->axis_deriv[axis];
}

} // namespace bouss
