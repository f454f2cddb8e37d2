#include "bouss/initial.hpp"

#include "bouss/spectral.hpp"

#include <cmath>
#include <random>

namespace bouss {

Field gaussian_field(const Grid& g, Real amplitude, Real center, Real width)
{
    const Real L = g.length();
    const Real x0 = center * L;
    const Real sigma = width * L;
    const int n = g.points();
    auto bump1d = [&](Real x) {
        Real v = 0;
        for (int img = -3; img <= 3; ++img) {
            const Real dxx = x - x0 + img * L;
            v += std::exp(-dxx * dxx / (sigma * sigma));
        }
        return v;
    };
    Array vals(g.modes());
    if (g.dim() == 1) {
        for (int i = 0; i < n; ++i) vals[i] = amplitude * bump1d(g.coord(i));
    } else {
        for (int i = 0; i < n; ++i) {
            const Real bx = bump1d(g.coord(i));
            for (int j = 0; j < n; ++j)
                vals[static_cast<Eigen::Index>(i) * n + j] = amplitude * bx * bump1d(g.coord(j));
        }
    }
    return Field(g, std::move(vals));
}

Field random_field(const Grid& g, Real amplitude, std::uint64_t seed, Real decay)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<Real> normal(0.0, 1.0);
    Array noise(g.modes());
    for (Eigen::Index k = 0; k < g.modes(); ++k) noise[k] = normal(rng);

    CArray c = forward(g, noise);
    const Array envelope =
        g.dealias_mask() * (1.0 + g.freq_sq()).pow(-decay / 2.0);
    c *= envelope.cast<Complex>();
    c[0] = 0.0; // zero mean
    Array vals = backward(g, c);
    const Real m = vals.abs().maxCoeff();
    if (m > 0.0) vals *= amplitude / m;
    return Field(g, std::move(vals));
}

Field single_mode_field(const Grid& g, Real amplitude, const std::array<int, 2>& mode)
{
    const Real base = 2.0 * Grid::pi() / g.length();
    const int n = g.points();
    Array vals(g.modes());
    if (g.dim() == 1) {
        for (int i = 0; i < n; ++i)
            vals[i] = amplitude * std::cos(base * mode[0] * g.coord(i));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                vals[static_cast<Eigen::Index>(i) * n + j] =
                    amplitude * std::cos(base * (mode[0] * g.coord(i) + mode[1] * g.coord(j)));
    }
    return Field(g, std::move(vals));
}

VectorField random_vector_field(const Grid& g, Real amplitude, std::uint64_t seed, Real decay)
{
    std::vector<Array> comps;
    comps.reserve(g.dim());
    for (int a = 0; a < g.dim(); ++a)
        comps.push_back(random_field(g, amplitude, seed + 0x9e3779b97f4a7c15ULL * (a + 1), decay)
                            .values());
    return VectorField(g, std::move(comps));
}

VectorField gradient_bump_vector_field(const Grid& g, Real amplitude, Real center, Real width)
{
    const Field f = gaussian_field(g, amplitude, center, width);
    return gradient(f);
}

} // namespace bouss
