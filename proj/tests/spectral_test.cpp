#include <catch2/catch_amalgamated.hpp>

#include "tfps/spectral.hpp"

#include <vector>

#include "test_support.hpp"

using namespace tfps;
using namespace tfps_test;

namespace {

int warning_count = 0;
void counting_handler(const std::string&) { ++warning_count; }

// Direct O(N^2) Riemann sum for the symplectic Fourier transform at one output
// point; independent oracle for the FFT-based implementation.
Complex fourier_direct(const PhaseField& a, double x, double p) {
    const GridSpec& g = a.grid;
    Complex sum(0.0, 0.0);
    for (int j = 0; j < g.n_points; ++j)
        for (int k = 0; k < g.n_points; ++k) {
            const double sigma = g.x(j) * p - g.p(k) * x;  // sigma(z, z') with z' = (x_j, p_k)
            sum += std::polar(1.0, -sigma / g.hbar) * a.at(j, k);
        }
    return sum * g.cell() / (2.0 * M_PI * g.hbar);
}

}  // namespace

TEST_CASE("GridSpec derives a Fourier-compatible momentum window") {
    const GridSpec g(128, 20.0, 1.0);
    CHECK(std::abs(g.length_x * g.length_p - 2.0 * M_PI * g.hbar * g.n_points) <=
          1e-9 * g.length_x * g.length_p);
    CHECK(g.x(0) == Catch::Approx(-10.0));
    CHECK(g.x(64) == Catch::Approx(0.0).margin(1e-14));
    CHECK(g.p(0) == Catch::Approx(-g.length_p / 2));
    CHECK_THROWS_AS(GridSpec(127, 20.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(128, -1.0, 1.0), std::invalid_argument);

    const GridSpec h(64, 20.0, 0.5);
    CHECK(std::abs(h.length_x * h.length_p - 2.0 * M_PI * h.hbar * h.n_points) <=
          1e-9 * h.length_x * h.length_p);
}

TEST_CASE("norms and inner products") {
    const GridSpec g = desk_grid();
    const PhaseField psi = PhaseField::gaussian(g);  // (pi hbar)^{-1/2} exp(-|z|^2 / 2 hbar)
    CHECK(l2_norm(psi) == Catch::Approx(1.0).margin(1e-10));

    auto rng = make_rng(5);
    const PhaseField a = random_smooth_field(rng, g);
    const PhaseField b = random_smooth_field(rng, g);
    CHECK(std::abs(inner(a, a) - Complex(l2_norm(a) * l2_norm(a), 0.0)) < 1e-10);
    CHECK(inner(a, a).real() >= 0.0);
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-12);

    const GridSpec g2(64, 20.0, 1.0);
    CHECK_THROWS_AS(inner(a, PhaseField::gaussian(g2)), std::invalid_argument);
}

TEST_CASE("symplectic Fourier fixes the standard Gaussian") {
    const GridSpec g = desk_grid();
    const PhaseField a = PhaseField::sampled(g, [&](double x, double p) {
        return Complex(std::exp(-(x * x + p * p) / (2.0 * g.hbar)), 0.0);
    });
    const PhaseField fa = symplectic_fourier(a);

    // Relative error off the tails (above the double-precision roundoff floor),
    // absolute error everywhere.
    double worst_rel = 0.0, worst_abs = 0.0;
    for (int j = 0; j < g.n_points; ++j)
        for (int k = 0; k < g.n_points; ++k) {
            const double expect = std::exp(-(g.x(j) * g.x(j) + g.p(k) * g.p(k)) / (2.0 * g.hbar));
            const double err = std::abs(fa.at(j, k) - Complex(expect, 0.0));
            worst_abs = std::max(worst_abs, err);
            if (expect >= 1e-6) worst_rel = std::max(worst_rel, err / expect);
        }
    CHECK(worst_rel <= 1e-8);
    CHECK(worst_abs <= 1e-12);
}

TEST_CASE("symplectic Fourier agrees with direct quadrature") {
    const GridSpec g(64, 16.0, 1.0);
    auto rng = make_rng(31);
    const PhaseField a = random_smooth_field(rng, g);
    const PhaseField fa = symplectic_fourier(a);

    const int picks[10][2] = {{0, 0},   {32, 32}, {10, 50}, {50, 10}, {17, 40},
                              {40, 17}, {5, 33},  {33, 60}, {60, 5},  {21, 21}};
    for (const auto& jk : picks) {
        const Complex oracle = fourier_direct(a, g.x(jk[0]), g.p(jk[1]));
        CHECK(std::abs(fa.at(jk[0], jk[1]) - oracle) < 1e-10);
    }
}

TEST_CASE("symplectic Fourier is an involution and unitary") {
    const GridSpec g = desk_grid();
    auto rng = make_rng(37);
    const PhaseField a = random_smooth_field(rng, g);
    const PhaseField b = random_smooth_field(rng, g);

    SECTION("involution") {
        const PhaseField faa = symplectic_fourier(symplectic_fourier(a));
        CHECK(l2_distance(faa, a) <= 1e-10 * l2_norm(a));
    }
    SECTION("Parseval") {
        const Complex lhs = inner(symplectic_fourier(a), symplectic_fourier(b));
        CHECK(std::abs(lhs - inner(a, b)) <= 1e-10 * l2_norm(a) * l2_norm(b));
    }
    SECTION("linearity") {
        const Complex alpha(0.3, -1.2), beta(-0.8, 0.1);
        PhaseField combo = alpha * a + beta * b;
        PhaseField lhs = symplectic_fourier(combo);
        PhaseField rhs = alpha * symplectic_fourier(a) + beta * symplectic_fourier(b);
        CHECK(l2_distance(lhs, rhs) <= 1e-12 * (l2_norm(a) + l2_norm(b)));
    }
}

TEST_CASE("spectral derivative of a Gaussian") {
    const GridSpec g = desk_grid();
    const PhaseField psi = PhaseField::sampled(g, [&](double x, double p) {
        return Complex(std::exp(-x * x / (2 * g.hbar)) * std::exp(-p * p / (2 * g.hbar)), 0.0);
    });
    const PhaseField dx = spectral_derivative(psi, Axis::X);
    const PhaseField dp = spectral_derivative(psi, Axis::P);

    double peak = 0.0;
    for (const auto& v : dx.values) peak = std::max(peak, std::abs(v));

    double worst_x = 0.0, worst_p = 0.0;
    for (int j = 0; j < g.n_points; ++j)
        for (int k = 0; k < g.n_points; ++k) {
            if (std::abs(g.x(j)) > 0.25 * g.length_x || std::abs(g.p(k)) > 0.25 * g.length_p)
                continue;
            const Complex ex = Complex(-g.x(j) / g.hbar, 0.0) * psi.at(j, k);
            const Complex ep = Complex(-g.p(k) / g.hbar, 0.0) * psi.at(j, k);
            worst_x = std::max(worst_x, std::abs(dx.at(j, k) - ex) / peak);
            worst_p = std::max(worst_p, std::abs(dp.at(j, k) - ep) / peak);
        }
    CHECK(worst_x <= 1e-8);
    CHECK(worst_p <= 1e-8);
}

TEST_CASE("spectral derivative of a constant vanishes and warns") {
    const GridSpec g(32, 10.0, 1.0);
    PhaseField one(g);
    for (auto& v : one.values) v = Complex(1.0, 0.0);

    warning_count = 0;
    set_warning_handler(&counting_handler);
    const PhaseField d = spectral_derivative(one, Axis::X);
    set_warning_handler(nullptr);

    CHECK(max_abs(d) < 1e-12);
    CHECK(warning_count == 1);  // constant field has no boundary decay
}

TEST_CASE("spectral derivative agrees with centered finite differences at O(dx^2)") {
    auto fd_defect = [](int N) {
        const GridSpec g(N, 20.0, 1.0);
        const PhaseField psi = PhaseField::sampled(g, [&](double x, double p) {
            return Complex(std::exp(-(x * x + p * p) / (2 * g.hbar)), 0.0);
        });
        const PhaseField d = spectral_derivative(psi, Axis::X);
        double peak = 0.0;
        for (const auto& v : d.values) peak = std::max(peak, std::abs(v));
        double worst = 0.0;
        for (int j = 1; j + 1 < N; ++j)
            for (int k = 0; k < N; ++k) {
                const Complex fd = (psi.at(j + 1, k) - psi.at(j - 1, k)) / (2.0 * g.dx());
                worst = std::max(worst, std::abs(fd - d.at(j, k)) / peak);
            }
        return worst;
    };
    const double e64 = fd_defect(64), e128 = fd_defect(128);
    CHECK(e64 / e128 == Catch::Approx(4.0).epsilon(0.3));
}

TEST_CASE("spectral shifts") {
    const GridSpec g(64, 16.0, 1.0);
    auto rng = make_rng(41);
    const PhaseField a = random_smooth_field(rng, g);

    SECTION("grid-aligned shift is an exact circular shift") {
        const int cells = 5;
        const PhaseField shifted = spectral_shift(a, Axis::X, cells * g.dx());
        double worst = 0.0;
        for (int j = 0; j < g.n_points; ++j)
            for (int k = 0; k < g.n_points; ++k) {
                const int src = (j - cells + g.n_points) % g.n_points;
                worst = std::max(worst, std::abs(shifted.at(j, k) - a.at(src, k)));
            }
        CHECK(worst < 1e-12 * max_abs(a));
    }
    SECTION("arbitrary shift is exactly unitary") {
        const PhaseField shifted = spectral_shift(a, Axis::P, 0.3456789);
        CHECK(l2_norm(shifted) == Catch::Approx(l2_norm(a)).margin(1e-13));
    }
    SECTION("zero shift is the identity") {
        const PhaseField shifted = spectral_shift(a, Axis::X, 0.0);
        CHECK(l2_distance(shifted, a) < 1e-13 * l2_norm(a));
    }
    SECTION("boundary decay defect distinguishes decaying from wrapped fields") {
        CHECK(boundary_decay_defect(PhaseField::gaussian(desk_grid())) < 1e-10);
        PhaseField flat(g);
        for (auto& v : flat.values) v = 1.0;
        CHECK(boundary_decay_defect(flat) == Catch::Approx(1.0));
    }
}
