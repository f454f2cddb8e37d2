#include "bouss/spectral.hpp"

namespace bouss {

namespace {

void require_finite(const CArray& symbol)
{
    if (!symbol.allFinite())
        throw std::invalid_argument("multiplier symbol contains non-finite values");
}

} // namespace

Field apply_multiplier(const Field& f, const CArray& symbol)
{
    if (symbol.size() != f.grid().modes())
        throw grid_mismatch{};
    require_finite(symbol);
    return Field(f.grid(), CArray(f.spectrum() * symbol));
}

Field apply_multiplier(const Field& f, const Array& symbol)
{
    if (symbol.size() != f.grid().modes())
        throw grid_mismatch{};
    if (!symbol.allFinite())
        throw std::invalid_argument("multiplier symbol contains non-finite values");
    return Field(f.grid(), CArray(f.spectrum() * symbol.cast<Complex>()));
}

CArray symbol_table(const Grid& g, const std::function<Complex(const Real*)>& fn)
{
    CArray out(g.modes());
    Real xi[2] = {0, 0};
    for (Eigen::Index k = 0; k < g.modes(); ++k) {
        for (int a = 0; a < g.dim(); ++a) xi[a] = g.axis_deriv(a)[k];
        out[k] = fn(xi);
    }
    return out;
}

VectorField gradient(const Field& f)
{
    const Grid& g = f.grid();
    const CArray c = f.spectrum();
    std::vector<Array> comps;
    comps.reserve(g.dim());
    for (int a = 0; a < g.dim(); ++a)
        comps.push_back(backward(g, deriv_spec(g, c, a)));
    return VectorField(g, std::move(comps));
}

Field divergence(const VectorField& v)
{
    const Grid& g = v.grid();
    CArray acc = CArray::Zero(g.modes());
    for (int a = 0; a < g.dim(); ++a)
        acc += deriv_spec(g, forward(g, v.comp(a)), a);
    return Field(g, acc);
}

Field laplacian(const Field& f)
{
    const Grid& g = f.grid();
    return Field(g, CArray(f.spectrum() * (-g.freq_sq()).cast<Complex>()));
}

Field curl(const VectorField& v)
{
    const Grid& g = v.grid();
    if (g.dim() == 1) return Field(g);
    const CArray c0 = forward(g, v.comp(0));
    const CArray c1 = forward(g, v.comp(1));
    return Field(g, CArray(deriv_spec(g, c1, 0) - deriv_spec(g, c0, 1)));
}

Field helmholtz_invert(const Field& f, Real coeff)
{
    if (!(coeff >= 0.0) || !std::isfinite(coeff))
        throw std::invalid_argument("helmholtz_invert needs coeff >= 0: the operator "
                                    "is not uniformly invertible otherwise");
    const Grid& g = f.grid();
    const Array sym = 1.0 / (1.0 + coeff * g.freq_sq());
    return Field(g, CArray(f.spectrum() * sym.cast<Complex>()));
}

VectorField leray_project(const VectorField& v)
{
    const Grid& g = v.grid();
    std::vector<CArray> c(g.dim());
    for (int a = 0; a < g.dim(); ++a) c[a] = forward(g, v.comp(a));

    // (P V)_i = V_i - xi_i (xi . V) / |xi|^2, identity on the zero mode
    CArray dot = CArray::Zero(g.modes());
    for (int a = 0; a < g.dim(); ++a)
        dot += c[a] * g.axis_deriv(a).cast<Complex>();
    const Array& q = g.freq_sq();
    CArray scale(g.modes());
    for (Eigen::Index k = 0; k < g.modes(); ++k)
        scale[k] = q[k] > 0.0 ? dot[k] / q[k] : Complex(0, 0);

    std::vector<Array> comps;
    comps.reserve(g.dim());
    for (int a = 0; a < g.dim(); ++a)
        comps.push_back(backward(g, CArray(c[a] - scale * g.axis_deriv(a).cast<Complex>())));
    return VectorField(g, std::move(comps));
}

Field dealias(const Field& f)
{
    const Grid& g = f.grid();
    return Field(g, CArray(f.spectrum() * g.dealias_mask().cast<Complex>()));
}

VectorField dealias(const VectorField& v)
{
    const Grid& g = v.grid();
    std::vector<Array> comps;
    comps.reserve(g.dim());
    for (int a = 0; a < g.dim(); ++a)
        comps.push_back(backward(g, CArray(forward(g, v.comp(a)) * g.dealias_mask().cast<Complex>())));
    return VectorField(g, std::move(comps));
}

} // namespace bouss
