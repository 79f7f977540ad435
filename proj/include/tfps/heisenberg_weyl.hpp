#pragma once

#include <stdexcept>

#include "tfps/grid.hpp"
#include "tfps/spectral.hpp"
#include "tfps/symplectic.hpp"

namespace tfps {

namespace detail {
inline void require_dof1(const PhasePoint& z0, const char* who) {
    if (z0.dof() != 1) throw std::invalid_argument(std::string(who) + ": n = 1 required");
}
}  // namespace detail

/// Translation operator on configuration-space states:
///   T(z0) psi(x) = e^{(i/hbar)(p0 x - p0 x0 / 2)} psi(x - x0).
/// The shift is spectral, so non-grid-aligned x0 is handled without
/// interpolation and the operator is exactly unitary on the periodic grid.
inline ConfigField hw_config(const PhasePoint& z0, const ConfigField& psi) {
    detail::require_dof1(z0, "hw_config");
    const double x0 = z0.x[0], p0 = z0.p[0];
    const double hbar = psi.grid.hbar;
    ConfigField out = spectral_shift(psi, x0);
    for (int j = 0; j < psi.grid.n_points; ++j)
        out.values[j] *= std::polar(1.0, (p0 * psi.grid.x(j) - 0.5 * p0 * x0) / hbar);
    return out;
}

/// Translation operator on phase-space fields:
///   T(z0) Psi(z) = e^{(i/hbar)(p0 x - p0 x0 / 2)} Psi(z - z0).
/// Same phase as hw_config (it depends only on x and z0); the translation
/// moves both coordinates.
inline PhaseField hw_phase(const PhasePoint& z0, const PhaseField& Psi) {
    detail::require_dof1(z0, "hw_phase");
    const double x0 = z0.x[0], p0 = z0.p[0];
    const double hbar = Psi.grid.hbar;
    PhaseField out = spectral_shift(Psi, Axis::X, x0);
    out = spectral_shift(out, Axis::P, p0);
    const int N = Psi.grid.n_points;
    for (int j = 0; j < N; ++j) {
        const Complex phase = std::polar(1.0, (p0 * Psi.grid.x(j) - 0.5 * p0 * x0) / hbar);
        for (int k = 0; k < N; ++k) out.at(j, k) *= phase;
    }
    return out;
}

/// Composable translation value; applies to either field family.
struct HWOperator {
    PhasePoint z0;

    ConfigField operator()(const ConfigField& psi) const { return hw_config(z0, psi); }
    PhaseField operator()(const PhaseField& Psi) const { return hw_phase(z0, Psi); }
};

inline HWOperator hw_operator(const PhasePoint& z0) { return HWOperator{z0}; }

/// Inverse translation: T(z0)^{-1} = T(-z0), with no extra phase
/// (sigma(-z0, z0) = 0 in the composition law).
inline HWOperator hw_inverse(const PhasePoint& z0) { return HWOperator{-z0}; }

}  // namespace tfps
