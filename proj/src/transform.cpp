#include "bouss/transform.hpp"

#include <unsupported/Eigen/FFT>

namespace bouss {

namespace {

// One FFT engine per thread; Eigen::FFT caches plans per size internally,
// so transforms stay reentrant across concurrently running workers.
Eigen::FFT<Real>& engine()
{
    thread_local Eigen::FFT<Real> fft;
    return fft;
}

void transform_1d(Eigen::VectorXcd& buf, bool inverse)
{
    static thread_local Eigen::VectorXcd out;
    out.resize(buf.size());
    if (inverse)
        engine().inv(out, buf); // scales by 1/N
    else
        engine().fwd(out, buf);
    buf.swap(out);
}

} // namespace

void fft_all_axes(const Grid& g, CArray& data, bool inverse)
{
    const int n = g.points();
    if (g.dim() == 1) {
        Eigen::VectorXcd buf = data.matrix();
        transform_1d(buf, inverse);
        data = buf.array();
        return;
    }
    // rows (axis 1, contiguous), then columns (axis 0)
    Eigen::VectorXcd buf(n);
    for (int r = 0; r < n; ++r) {
        buf = data.segment(static_cast<Eigen::Index>(r) * n, n).matrix();
        transform_1d(buf, inverse);
        data.segment(static_cast<Eigen::Index>(r) * n, n) = buf.array();
    }
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) buf[r] = data[static_cast<Eigen::Index>(r) * n + c];
        transform_1d(buf, inverse);
        for (int r = 0; r < n; ++r) data[static_cast<Eigen::Index>(r) * n + c] = buf[r];
    }
}

CArray forward(const Grid& g, const Array& samples)
{
    if (samples.size() != g.modes())
        throw std::invalid_argument("sample count does not match grid");
    CArray data = samples.cast<Complex>();
    fft_all_axes(g, data, false);
    data /= static_cast<Real>(g.modes());
    return data;
}

Array backward(const Grid& g, const CArray& coeff)
{
    if (coeff.size() != g.modes())
        throw std::invalid_argument("coefficient count does not match grid");
    CArray data = coeff;
    fft_all_axes(g, data, true);          // Eigen inv scales by 1/N per axis
    data *= static_cast<Real>(g.modes()); // undo it: plain synthesis sum
    return data.real();
}

} // namespace bouss
