#ifndef BOUSS_FIELD_HPP
#define BOUSS_FIELD_HPP

#include "bouss/grid.hpp"
#include "bouss/transform.hpp"

#include <vector>

namespace bouss {

/// Real scalar field sampled on a Grid. Immutable value type: operations
/// return fresh fields, nothing mutates shared state.
class Field {
public:
    Field(Grid grid, Array values) : grid_(std::move(grid)), v_(std::move(values))
    {
        if (v_.size() != grid_.modes())
            throw std::invalid_argument("field size does not match grid");
    }
    /// Zero field.
    explicit Field(Grid grid) : grid_(std::move(grid)), v_(Array::Zero(grid_.modes())) {}
    /// Synthesis from spectral coefficients.
    Field(Grid grid, const CArray& coeff) : grid_(std::move(grid)), v_(backward(grid_, coeff)) {}

    const Grid& grid() const { return grid_; }
    const Array& values() const { return v_; }
    CArray spectrum() const { return forward(grid_, v_); }

    Real max_abs() const { return v_.size() ? v_.abs().maxCoeff() : 0.0; }
    bool all_finite() const { return v_.allFinite(); }

private:
    Grid grid_;
    Array v_;
};

/// Real vector field with grid.dim() components.
class VectorField {
public:
    VectorField(Grid grid, std::vector<Array> comps)
        : grid_(std::move(grid)), c_(std::move(comps))
    {
        if (static_cast<int>(c_.size()) != grid_.dim())
            throw std::invalid_argument("component count does not match grid dimension");
        for (const auto& a : c_)
            if (a.size() != grid_.modes())
                throw std::invalid_argument("component size does not match grid");
    }
    /// Zero vector field.
    explicit VectorField(Grid grid) : grid_(std::move(grid))
    {
        c_.assign(grid_.dim(), Array::Zero(grid_.modes()));
    }

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.dim(); }
    const Array& comp(int i) const { return c_.at(i); }
    Field component(int i) const { return Field(grid_, c_.at(i)); }

    bool all_finite() const
    {
        for (const auto& a : c_)
            if (!a.allFinite()) return false;
        return true;
    }
    bool is_zero() const
    {
        for (const auto& a : c_)
            if ((a != 0.0).any()) return false;
        return true;
    }

private:
    Grid grid_;
    std::vector<Array> c_;
};

/// Discrete L2 inner product, (L/N)^n * sum(f*g): spectral quadrature on
/// the torus, exact for band-limited products.
inline Real inner_product_l2(const Field& f, const Field& g)
{
    require_same_grid(f.grid(), g.grid());
    return f.grid().quad_weight() * (f.values() * g.values()).sum();
}

inline Real inner_product_l2(const VectorField& f, const VectorField& g)
{
    require_same_grid(f.grid(), g.grid());
    Real s = 0;
    for (int i = 0; i < f.dim(); ++i) s += (f.comp(i) * g.comp(i)).sum();
    return f.grid().quad_weight() * s;
}

inline Real norm_l2(const Field& f) { return std::sqrt(std::max(0.0, inner_product_l2(f, f))); }
inline Real norm_l2(const VectorField& f) { return std::sqrt(std::max(0.0, inner_product_l2(f, f))); }

} // namespace bouss

#endif
