#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace tfps {

using Complex = std::complex<double>;

/// 1-D periodic grid for configuration-space states: x_j = -Lx/2 + j Lx/N.
struct ConfigGrid {
    int n_points = 0;
    double length_x = 0.0;
    double hbar = 1.0;

    ConfigGrid() = default;
    ConfigGrid(int N, double Lx, double hbar_ = 1.0) : n_points(N), length_x(Lx), hbar(hbar_) {
        if (N < 2 || N % 2 != 0) throw std::invalid_argument("ConfigGrid: N must be even and >= 2");
        if (Lx <= 0.0) throw std::invalid_argument("ConfigGrid: Lx must be positive");
        if (hbar <= 0.0) throw std::invalid_argument("ConfigGrid: hbar must be positive");
    }

    double dx() const { return length_x / n_points; }
    double x(int j) const { return -0.5 * length_x + j * dx(); }

    bool operator==(const ConfigGrid&) const = default;
};

/// Fourier-compatible N x N phase-space grid. Lp is derived as 2*pi*hbar*N/Lx,
/// which makes the symplectic Fourier transform an exact grid automorphism.
struct GridSpec {
    int n_points = 0;
    double length_x = 0.0;
    double length_p = 0.0;
    double hbar = 1.0;

    GridSpec() = default;
    GridSpec(int N, double Lx, double hbar_ = 1.0)
        : n_points(N), length_x(Lx), length_p(2.0 * M_PI * hbar_ * N / Lx), hbar(hbar_) {
        if (N < 2 || N % 2 != 0) throw std::invalid_argument("GridSpec: N must be even and >= 2");
        if (Lx <= 0.0) throw std::invalid_argument("GridSpec: Lx must be positive");
        if (hbar <= 0.0) throw std::invalid_argument("GridSpec: hbar must be positive");
    }

    double dx() const { return length_x / n_points; }
    double dp() const { return length_p / n_points; }
    double x(int j) const { return -0.5 * length_x + j * dx(); }
    double p(int k) const { return -0.5 * length_p + k * dp(); }
    double cell() const { return dx() * dp(); }

    ConfigGrid config() const { return ConfigGrid(n_points, length_x, hbar); }

    bool operator==(const GridSpec&) const = default;
};

/// Complex field Psi(z) sampled on a GridSpec; values[j*N + k] = Psi(x_j, p_k).
struct PhaseField {
    GridSpec grid;
    std::vector<Complex> values;

    PhaseField() = default;
    explicit PhaseField(const GridSpec& g)
        : grid(g), values(static_cast<std::size_t>(g.n_points) * g.n_points, Complex(0.0, 0.0)) {}

    Complex& at(int j, int k) { return values[static_cast<std::size_t>(j) * grid.n_points + k]; }
    const Complex& at(int j, int k) const {
        return values[static_cast<std::size_t>(j) * grid.n_points + k];
    }

    static PhaseField sampled(const GridSpec& g, const std::function<Complex(double, double)>& f) {
        PhaseField out(g);
        for (int j = 0; j < g.n_points; ++j)
            for (int k = 0; k < g.n_points; ++k) out.at(j, k) = f(g.x(j), g.p(k));
        return out;
    }

    /// Normalized phase-space Gaussian (pi hbar)^{-1/2} exp(-|z - zc|^2 / (2 hbar)).
    static PhaseField gaussian(const GridSpec& g, double xc = 0.0, double pc = 0.0) {
        const double norm = 1.0 / std::sqrt(M_PI * g.hbar);
        return sampled(g, [&](double x, double p) {
            const double dx = x - xc, dp = p - pc;
            return Complex(norm * std::exp(-(dx * dx + dp * dp) / (2.0 * g.hbar)), 0.0);
        });
    }

    PhaseField& operator+=(const PhaseField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    PhaseField& operator-=(const PhaseField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
        return *this;
    }
    PhaseField& operator*=(Complex s) {
        for (auto& v : values) v *= s;
        return *this;
    }
    friend PhaseField operator+(PhaseField a, const PhaseField& b) { return a += b; }
    friend PhaseField operator-(PhaseField a, const PhaseField& b) { return a -= b; }
    friend PhaseField operator*(Complex s, PhaseField a) { return a *= s; }

    void check_same_grid(const PhaseField& o) const {
        if (!(grid == o.grid)) throw std::invalid_argument("PhaseField: grid mismatch");
    }
};

/// Complex function psi(x_j) on a 1-D periodic grid.
struct ConfigField {
    ConfigGrid grid;
    std::vector<Complex> values;

    ConfigField() = default;
    explicit ConfigField(const ConfigGrid& g) : grid(g), values(g.n_points, Complex(0.0, 0.0)) {}

    static ConfigField sampled(const ConfigGrid& g, const std::function<Complex(double)>& f) {
        ConfigField out(g);
        for (int j = 0; j < g.n_points; ++j) out.values[j] = f(g.x(j));
        return out;
    }

    /// Normalized Gaussian (pi hbar w^2)^{-1/4} exp(-(x - xc)^2 / (2 hbar w^2)).
    static ConfigField gaussian(const ConfigGrid& g, double xc = 0.0, double width = 1.0) {
        const double s2 = g.hbar * width * width;
        const double norm = std::pow(M_PI * s2, -0.25);
        return sampled(g, [&](double x) {
            const double d = x - xc;
            return Complex(norm * std::exp(-d * d / (2.0 * s2)), 0.0);
        });
    }

    ConfigField& operator+=(const ConfigField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    ConfigField& operator-=(const ConfigField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
        return *this;
    }
    ConfigField& operator*=(Complex s) {
        for (auto& v : values) v *= s;
        return *this;
    }
    friend ConfigField operator+(ConfigField a, const ConfigField& b) { return a += b; }
    friend ConfigField operator-(ConfigField a, const ConfigField& b) { return a -= b; }
    friend ConfigField operator*(Complex s, ConfigField a) { return a *= s; }

    void check_same_grid(const ConfigField& o) const {
        if (!(grid == o.grid)) throw std::invalid_argument("ConfigField: grid mismatch");
    }
};

/// <Psi, Phi> = sum conj(Psi) Phi dx dp; conjugate-linear in the first slot.
inline Complex inner(const PhaseField& a, const PhaseField& b) {
    a.check_same_grid(b);
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return s * a.grid.cell();
}

inline double l2_norm(const PhaseField& a) {
    double s = 0.0;
    for (const auto& v : a.values) s += std::norm(v);
    return std::sqrt(s * a.grid.cell());
}

inline Complex inner(const ConfigField& a, const ConfigField& b) {
    a.check_same_grid(b);
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return s * a.grid.dx();
}

inline double l2_norm(const ConfigField& a) {
    double s = 0.0;
    for (const auto& v : a.values) s += std::norm(v);
    return std::sqrt(s * a.grid.dx());
}

inline double max_abs(const PhaseField& a) {
    double m = 0.0;
    for (const auto& v : a.values) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs(const ConfigField& a) {
    double m = 0.0;
    for (const auto& v : a.values) m = std::max(m, std::abs(v));
    return m;
}

inline double l2_distance(const PhaseField& a, const PhaseField& b) { return l2_norm(a - b); }
inline double l2_distance(const ConfigField& a, const ConfigField& b) { return l2_norm(a - b); }

}  // namespace tfps
