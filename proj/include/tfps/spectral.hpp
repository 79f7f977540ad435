#pragma once

#include <fftw3.h>

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "tfps/diagnostics.hpp"
#include "tfps/grid.hpp"

namespace tfps {

enum class Axis { X, P };

namespace detail {

// Cached FFTW plans, keyed by geometry. Plans are created with FFTW_UNALIGNED
// so they can be executed on any array of matching layout.
inline fftw_plan get_plan(int n, int howmany, int stride, int dist, int sign) {
    using Key = std::tuple<int, int, int, int, int>;
    static std::map<Key, fftw_plan> cache;
    const Key key{n, howmany, stride, dist, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::size_t span = static_cast<std::size_t>(howmany - 1) * dist +
                             static_cast<std::size_t>(n - 1) * stride + 1;
    std::vector<Complex> scratch(span);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, ptr, nullptr, stride, dist, ptr, nullptr,
                                        stride, dist, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

inline void dft_many(Complex* data, int n, int howmany, int stride, int dist, int sign) {
    fftw_plan plan = get_plan(n, howmany, stride, dist, sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, ptr, ptr);
}

// Signed frequency index: m -> m for m < N/2, m - N otherwise.
inline int signed_mode(int m, int n) { return m < n / 2 ? m : m - n; }

}  // namespace detail

/// Unnormalized in-place DFT of a 1-D array. sign = -1 is the forward
/// transform sum_j f_j e^{-2 pi i j m / N}; sign = +1 the backward one.
inline void dft(std::vector<Complex>& v, int sign) {
    detail::dft_many(v.data(), static_cast<int>(v.size()), 1, 1, static_cast<int>(v.size()), sign);
}

/// Unnormalized in-place DFT along one axis of a phase-space field.
inline void dft_axis(PhaseField& f, Axis axis, int sign) {
    const int N = f.grid.n_points;
    if (axis == Axis::P)
        detail::dft_many(f.values.data(), N, N, 1, N, sign);  // contiguous rows
    else
        detail::dft_many(f.values.data(), N, N, N, 1, sign);  // strided columns
}

/// Largest |Psi| on the wrap seam (j = 0 row and k = 0 column) relative to the
/// global maximum; small values mean the field is numerically periodic.
inline double boundary_decay_defect(const PhaseField& f) {
    const int N = f.grid.n_points;
    double edge = 0.0;
    for (int k = 0; k < N; ++k) edge = std::max(edge, std::abs(f.at(0, k)));
    for (int j = 0; j < N; ++j) edge = std::max(edge, std::abs(f.at(j, 0)));
    const double peak = max_abs(f);
    return peak > 0.0 ? edge / peak : 0.0;
}

inline double boundary_decay_defect(const ConfigField& f) {
    const double peak = max_abs(f);
    return peak > 0.0 ? std::abs(f.values[0]) / peak : 0.0;
}

/// Translate Psi by `amount` along the given axis via a spectral phase ramp.
/// Exact circular shift for grid-aligned amounts, trigonometric interpolation
/// otherwise; exactly unitary either way.
inline PhaseField spectral_shift(const PhaseField& f, Axis axis, double amount) {
    const int N = f.grid.n_points;
    const double L = (axis == Axis::X) ? f.grid.length_x : f.grid.length_p;
    PhaseField out = f;
    dft_axis(out, axis, FFTW_FORWARD);
    std::vector<Complex> mult(N);
    for (int m = 0; m < N; ++m) {
        const double k = 2.0 * M_PI * detail::signed_mode(m, N) / L;
        mult[m] = std::polar(1.0 / N, -k * amount);
    }
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) out.at(j, k) *= (axis == Axis::X) ? mult[j] : mult[k];
    dft_axis(out, axis, FFTW_BACKWARD);
    return out;
}

inline ConfigField spectral_shift(const ConfigField& f, double amount) {
    const int N = f.grid.n_points;
    ConfigField out = f;
    dft(out.values, FFTW_FORWARD);
    for (int m = 0; m < N; ++m) {
        const double k = 2.0 * M_PI * detail::signed_mode(m, N) / f.grid.length_x;
        out.values[m] *= std::polar(1.0 / N, -k * amount);
    }
    dft(out.values, FFTW_BACKWARD);
    return out;
}

/// d/dx or d/dp via transform, multiply by i k, inverse transform. The Nyquist
/// mode multiplier is zeroed to keep the operator anti-Hermitian. Emits a
/// warning when the field is not numerically periodic at the window boundary.
inline PhaseField spectral_derivative(const PhaseField& f, Axis axis) {
    const int N = f.grid.n_points;
    const double L = (axis == Axis::X) ? f.grid.length_x : f.grid.length_p;
    if (boundary_decay_defect(f) >= 1e-8)
        warn("spectral_derivative: field amplitude at the window boundary exceeds 1e-8 of "
             "its peak; the periodic model may be inaccurate");
    PhaseField out = f;
    dft_axis(out, axis, FFTW_FORWARD);
    std::vector<Complex> mult(N);
    for (int m = 0; m < N; ++m) {
        const int sm = detail::signed_mode(m, N);
        const double k = (m == N / 2) ? 0.0 : 2.0 * M_PI * sm / L;
        mult[m] = Complex(0.0, k / N);
    }
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) out.at(j, k) *= (axis == Axis::X) ? mult[j] : mult[k];
    dft_axis(out, axis, FFTW_BACKWARD);
    return out;
}

inline ConfigField spectral_derivative(const ConfigField& f) {
    const int N = f.grid.n_points;
    if (boundary_decay_defect(f) >= 1e-8)
        warn("spectral_derivative: field amplitude at the window boundary exceeds 1e-8 of "
             "its peak; the periodic model may be inaccurate");
    ConfigField out = f;
    dft(out.values, FFTW_FORWARD);
    for (int m = 0; m < N; ++m) {
        const int sm = detail::signed_mode(m, N);
        const double k = (m == N / 2) ? 0.0 : 2.0 * M_PI * sm / f.grid.length_x;
        out.values[m] *= Complex(0.0, k / N);
    }
    dft(out.values, FFTW_BACKWARD);
    return out;
}

/// Symplectic Fourier transform
///   F a(z) = (2 pi hbar)^{-n} sum_{z'} e^{-(i/hbar) sigma(z,z')} a(z') dx dp,
/// realized by two 1-D fast transforms: the x' sum pairs with the output p
/// index, the p' sum with the output x index. On grids with Lx Lp = 2 pi hbar N
/// this is an exact involution and exactly unitary (up to roundoff).
inline PhaseField symplectic_fourier(const PhaseField& a) {
    const int N = a.grid.n_points;
    PhaseField work = a;

    // sum_{k'} (-1)^{k'} e^{+2 pi i j k'/N} a[j'][k']  -> index j in the k' slot
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            if (k % 2 != 0) work.at(j, k) = -work.at(j, k);
    dft_axis(work, Axis::P, FFTW_BACKWARD);

    // sum_{j'} (-1)^{j'} e^{-2 pi i j' k/N} (...)  -> index k in the j' slot
    for (int j = 0; j < N; ++j)
        if (j % 2 != 0)
            for (int k = 0; k < N; ++k) work.at(j, k) = -work.at(j, k);
    dft_axis(work, Axis::X, FFTW_FORWARD);

    // work[k][j] now holds the double sum for output point (x_j, p_k).
    const double coef = a.grid.cell() / (2.0 * M_PI * a.grid.hbar);
    PhaseField out(a.grid);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
            out.at(j, k) = coef * sign * work.at(k, j);
        }
    return out;
}

}  // namespace tfps
