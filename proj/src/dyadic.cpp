#include "bouss/dyadic.hpp"

#include <cmath>

namespace bouss {

namespace {

// e^{-1/x} for x > 0, identically 0 otherwise; the standard C^inf glue.
Real bump(Real x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// Smooth transition from 1 at t <= 0 to 0 at t >= 1; exactly 1 and 0 on
// the closed complement of (0,1), so all support statements hold in
// floating point, not just up to rounding.
Real transition(Real t)
{
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const Real a = bump(1.0 - t);
    return a / (a + bump(t));
}

} // namespace

Real DyadicPartition::chi(Real rho)
{
    return transition((std::abs(rho) - 0.75) / (4.0 / 3.0 - 0.75));
}

DyadicPartition::DyadicPartition(const Grid& grid) : grid_(grid)
{
    const Real ximax = grid_.max_freq();
    // largest j with (3/4) 2^j < |xi|_max; blocks above never meet the grid
    int j = 0;
    while (0.75 * std::ldexp(1.0, j + 1) < ximax) ++j;
    j_max_ = (0.75 * std::ldexp(1.0, j) < ximax) ? j : j - 1;
    if (j_max_ < 1)
        throw std::invalid_argument("grid too coarse for a dyadic partition: "
                                    "blocks j in {-1,0,1} do not fit");

    const Array& rho = grid_.freq_abs();
    w_.reserve(block_count());
    Array c(grid_.modes());
    for (Eigen::Index k = 0; k < grid_.modes(); ++k) c[k] = chi(rho[k]);
    w_.push_back(std::move(c));
    for (int jj = 0; jj <= j_max_; ++jj) {
        const Real scale = std::ldexp(1.0, -jj);
        Array p(grid_.modes());
        for (Eigen::Index k = 0; k < grid_.modes(); ++k) p[k] = phi(scale * rho[k]);
        w_.push_back(std::move(p));
    }
}

const Array& DyadicPartition::block_weight(int j) const
{
    if (j < -1 || j > j_max_)
        throw std::invalid_argument("dyadic block index out of range");
    return w_[static_cast<size_t>(j + 1)];
}

Array DyadicPartition::low_pass_weight(int j) const
{
    // telescoping: sum_{k <= j-1} block weights collapses to chi(2^{-j} .)
    // for j >= 0; below that the sum is empty
    if (j <= -1) return Array::Zero(grid_.modes());
    const Real scale = std::ldexp(1.0, -j);
    const Array& rho = grid_.freq_abs();
    Array out(grid_.modes());
    for (Eigen::Index k = 0; k < grid_.modes(); ++k) out[k] = chi(scale * rho[k]);
    return out;
}

DyadicPartition build_partition(const Grid& grid) { return DyadicPartition(grid); }

Field dyadic_block(const DyadicPartition& p, const Field& u, int j)
{
    require_same_grid(p.grid(), u.grid());
    if (j < -2 || j > p.j_max())
        throw std::invalid_argument("dyadic block index out of range");
    if (j == -2) return Field(u.grid());
    return Field(u.grid(), CArray(u.spectrum() * p.block_weight(j).cast<Complex>()));
}

Field low_pass(const DyadicPartition& p, const Field& u, int j)
{
    require_same_grid(p.grid(), u.grid());
    return Field(u.grid(), CArray(u.spectrum() * p.low_pass_weight(j).cast<Complex>()));
}

Real ell_r(const std::vector<Real>& terms, Real r)
{
    if (!(r >= 1.0))
        throw std::invalid_argument("ell^r index must satisfy r >= 1");
    if (std::isinf(r)) {
        Real m = 0;
        for (Real t : terms) m = std::max(m, std::abs(t));
        return m;
    }
    if (r == 1.0) {
        Real s = 0;
        for (Real t : terms) s += std::abs(t);
        return s;
    }
    if (r == 2.0) {
        Real s = 0;
        for (Real t : terms) s += t * t;
        return std::sqrt(s);
    }
    Real s = 0;
    for (Real t : terms) s += std::pow(std::abs(t), r);
    return std::pow(s, 1.0 / r);
}

std::vector<Real> block_norms(const DyadicPartition& p, const CArray& coeff, int grad_order)
{
    return block_norms(p, std::vector<CArray>{coeff}, grad_order);
}

std::vector<Real> block_norms(const DyadicPartition& p, const std::vector<CArray>& coeffs,
                              int grad_order)
{
    const Grid& g = p.grid();
    Array density = Array::Zero(g.modes());
    for (const auto& c : coeffs) density += c.abs2();
    if (grad_order == 1)
        density *= g.freq_sq();
    else if (grad_order == 2)
        density *= g.freq_sq().square();
    else if (grad_order != 0)
        throw std::invalid_argument("grad_order must be 0, 1 or 2");

    const Real vol = std::pow(g.length(), g.dim());
    std::vector<Real> out(static_cast<size_t>(p.block_count()));
    for (int j = -1; j <= p.j_max(); ++j) {
        const Array& w = p.block_weight(j);
        out[static_cast<size_t>(j + 1)] = std::sqrt(vol * (w.square() * density).sum());
    }
    return out;
}

Real besov_from_blocks(const std::vector<Real>& norms, Real s, Real r)
{
    std::vector<Real> terms(norms.size());
    for (size_t i = 0; i < norms.size(); ++i) {
        const int j = static_cast<int>(i) - 1;
        terms[i] = std::pow(2.0, j * s) * norms[i];
    }
    return ell_r(terms, r);
}

Real besov_norm(const DyadicPartition& p, const Field& u, Real s, Real r)
{
    require_same_grid(p.grid(), u.grid());
    return besov_from_blocks(block_norms(p, u.spectrum(), 0), s, r);
}

Real besov_norm(const DyadicPartition& p, const VectorField& u, Real s, Real r)
{
    require_same_grid(p.grid(), u.grid());
    std::vector<CArray> cs;
    cs.reserve(u.dim());
    for (int a = 0; a < u.dim(); ++a) cs.push_back(forward(u.grid(), u.comp(a)));
    return besov_from_blocks(block_norms(p, cs, 0), s, r);
}

Real commutator_ratio(const DyadicPartition& p, const Field& u, const Field& v, Real s, Real r)
{
    require_same_grid(p.grid(), u.grid());
    require_same_grid(p.grid(), v.grid());
    const Grid& g = p.grid();

    const CArray uc = u.spectrum();
    const CArray vc = v.spectrum();
    const CArray dv = deriv_spec(g, vc, 0); // representative first-order derivative
    const Array dv_phys = backward(g, dv);
    const Array prod = u.values() * dv_phys;
    const CArray prod_c = forward(g, prod);

    const Real rhs_grad = besov_from_blocks(block_norms(p, uc, 1), s - 1.0, r);
    const Real rhs_v = besov_from_blocks(block_norms(p, vc, 0), s, r);
    if (rhs_grad <= 0.0 || rhs_v <= 0.0) return 0.0;

    std::vector<Real> terms(static_cast<size_t>(p.block_count()));
    const Real qw = g.quad_weight();
    for (int j = -1; j <= p.j_max(); ++j) {
        const Array& w = p.block_weight(j);
        const Array a = backward(g, CArray(prod_c * w.cast<Complex>()));
        const Array b = u.values() * backward(g, CArray(dv * w.cast<Complex>()));
        const Real nrm = std::sqrt(qw * (a - b).square().sum());
        terms[static_cast<size_t>(j + 1)] = std::pow(2.0, j * s) * nrm;
    }
    return ell_r(terms, r) / (rhs_grad * rhs_v);
}

} // namespace bouss
