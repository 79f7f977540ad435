#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace tfps {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A point z = (x, p) of 2n-dimensional phase space.
struct PhasePoint {
    Vector x;
    Vector p;

    PhasePoint() : x(Vector::Zero(1)), p(Vector::Zero(1)) {}

    PhasePoint(Vector x_, Vector p_) : x(std::move(x_)), p(std::move(p_)) {
        if (x.size() != p.size() || x.size() < 1)
            throw std::invalid_argument("PhasePoint: x and p must have equal length n >= 1");
    }

    // n = 1 convenience.
    PhasePoint(double x1, double p1) : x(Vector::Constant(1, x1)), p(Vector::Constant(1, p1)) {}

    int dof() const { return static_cast<int>(x.size()); }

    // Stacked coordinates (x; p), matching the block convention of J.
    Vector stacked() const {
        Vector z(2 * dof());
        z << x, p;
        return z;
    }

    static PhasePoint from_stacked(const Vector& z) {
        if (z.size() % 2 != 0 || z.size() < 2)
            throw std::invalid_argument("PhasePoint: stacked vector must have even length >= 2");
        const int n = static_cast<int>(z.size()) / 2;
        return PhasePoint(z.head(n), z.tail(n));
    }

    PhasePoint operator+(const PhasePoint& o) const { return PhasePoint(x + o.x, p + o.p); }
    PhasePoint operator-(const PhasePoint& o) const { return PhasePoint(x - o.x, p - o.p); }
    PhasePoint operator-() const { return PhasePoint(-x, -p); }
    friend PhasePoint operator*(double s, const PhasePoint& z) { return PhasePoint(s * z.x, s * z.p); }
};

/// Standard symplectic matrix J = [[0, I], [-I, 0]] in the (x, p) block convention.
inline Matrix symplectic_J(int n) {
    if (n < 1) throw std::invalid_argument("symplectic_J: n >= 1 required");
    Matrix J = Matrix::Zero(2 * n, 2 * n);
    J.topRightCorner(n, n) = Matrix::Identity(n, n);
    J.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return J;
}

/// Symplectic form sigma(z, z') = (z')^T J z = x'.p - p'.x.
inline double symplectic_form(const PhasePoint& z, const PhasePoint& zp) {
    if (z.dof() != zp.dof())
        throw std::invalid_argument("symplectic_form: dimension mismatch");
    return zp.x.dot(z.p) - zp.p.dot(z.x);
}

/// True iff ||S^T J S - J||_max <= tol.
inline bool is_symplectic(const Matrix& S, double tol = 1e-10) {
    if (S.rows() != S.cols()) throw std::invalid_argument("is_symplectic: matrix must be square");
    if (S.rows() % 2 != 0 || S.rows() == 0)
        throw std::invalid_argument("is_symplectic: dimension must be even and positive");
    const int n = static_cast<int>(S.rows()) / 2;
    const Matrix J = symplectic_J(n);
    return ((S.transpose() * J * S - J).cwiseAbs().maxCoeff()) <= tol;
}

/// 2n x 2n real matrix with S^T J S = J, checked on construction.
class SymplecticMatrix {
  public:
    explicit SymplecticMatrix(Matrix S, double tol = 1e-10) : S_(std::move(S)) {
        if (!is_symplectic(S_, tol))
            throw std::invalid_argument("SymplecticMatrix: S^T J S != J within tolerance " +
                                        std::to_string(tol));
    }

    const Matrix& entries() const { return S_; }
    int dof() const { return static_cast<int>(S_.rows()) / 2; }

    SymplecticMatrix inverse() const {
        // S^{-1} = J^{-1} S^T J = -J S^T J; computed in closed form to stay exactly symplectic.
        const Matrix J = symplectic_J(dof());
        return SymplecticMatrix(-J * S_.transpose() * J);
    }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const {
        return SymplecticMatrix(S_ * o.S_);
    }

    PhasePoint operator*(const PhasePoint& z) const {
        if (z.dof() != dof()) throw std::invalid_argument("SymplecticMatrix: dimension mismatch");
        return PhasePoint::from_stacked(S_ * z.stacked());
    }

    static SymplecticMatrix identity(int n) { return SymplecticMatrix(Matrix::Identity(2 * n, 2 * n)); }

  private:
    Matrix S_;
};

/// H(z) = 1/2 z^T M z with M symmetric.
struct QuadraticHamiltonian {
    Matrix M;

    explicit QuadraticHamiltonian(Matrix M_) : M(std::move(M_)) {
        if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0)
            throw std::invalid_argument("QuadraticHamiltonian: M must be 2n x 2n");
        if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("QuadraticHamiltonian: M must be symmetric to 1e-12");
    }

    int dof() const { return static_cast<int>(M.rows()) / 2; }

    double value(const PhasePoint& z) const {
        const Vector v = z.stacked();
        return 0.5 * v.dot(M * v);
    }

    // n = 1 with M = [[mxx, mxp], [mxp, mpp]].
    static QuadraticHamiltonian coefficients(double mxx, double mxp, double mpp) {
        Matrix M(2, 2);
        M << mxx, mxp, mxp, mpp;
        return QuadraticHamiltonian(M);
    }

    static QuadraticHamiltonian harmonic(int n = 1) {
        return QuadraticHamiltonian(Matrix::Identity(2 * n, 2 * n));
    }
};

/// H_{z0}(z) = sigma(z, z0); generates the translation flow f_t(z) = z + t z0.
struct LinearHamiltonian {
    PhasePoint z0;

    explicit LinearHamiltonian(PhasePoint z0_) : z0(std::move(z0_)) {}

    double value(const PhasePoint& z) const { return symplectic_form(z, z0); }
};

/// S_t = exp(t J M), the Hamiltonian flow of H(z) = 1/2 z^T M z.
inline SymplecticMatrix flow_matrix(const QuadraticHamiltonian& H, double t) {
    const Matrix JM = symplectic_J(H.dof()) * H.M;
    Matrix S = (t * JM).exp();
    return SymplecticMatrix(std::move(S));
}

/// Phase-plane rotation R(theta) = exp(theta J); symplectic for every theta.
inline SymplecticMatrix rotation(int n, double theta) {
    return flow_matrix(QuadraticHamiltonian::harmonic(n), theta);
}

/// Symmetric Q with 1/2 u^T Q u = -1/2 sigma(S(S-I)^{-1} u, (S-I)^{-1} u).
/// This is the chirp exponent of the regular metaplectic integral after the
/// substitution u = (S-I) z0. Requires det(S-I) != 0.
inline Matrix cayley_chirp(const SymplecticMatrix& S) {
    const int n = S.dof();
    const Matrix I = Matrix::Identity(2 * n, 2 * n);
    const Matrix SI = S.entries() - I;
    if (std::abs(SI.determinant()) <= 1e-9)
        throw std::invalid_argument(
            "cayley_chirp: singular Cayley (det(S-I) ~ 0); factor via split_for_singular");
    const Matrix B = SI.inverse();           // (S-I)^{-1}
    const Matrix A = S.entries() * B;        // S(S-I)^{-1}
    const Matrix J = symplectic_J(n);
    // sigma(Au, Bu) = u^T B^T J A u; symmetrized so that u^T Q u reproduces -sigma(Au, Bu).
    const Matrix raw = B.transpose() * J * A;
    return -0.5 * (raw + raw.transpose());
}

/// Factor S = S1 * S2 with both |det(Si - I)| > 1e-6 and S2 a pure rotation.
/// Deterministic: scans a fixed 64-point angle grid and keeps the best split.
inline std::pair<SymplecticMatrix, SymplecticMatrix> split_for_singular(const SymplecticMatrix& S) {
    const int n = S.dof();
    constexpr int kAngles = 64;
    double best_theta = 0.0;
    double best_score = -1.0;
    for (int i = 0; i < kAngles; ++i) {
        const double theta = 2.0 * M_PI * (i + 0.5) / kAngles;
        const Matrix R = rotation(n, theta).entries();
        const Matrix S1 = S.entries() * R.transpose();  // R^{-1} = R^T for rotations
        const Matrix I = Matrix::Identity(2 * n, 2 * n);
        const double d1 = std::abs((S1 - I).determinant());
        const double d2 = std::abs((R - I).determinant());
        const double score = std::min(d1, d2);
        if (score > best_score) {
            best_score = score;
            best_theta = theta;
        }
    }
    if (best_score <= 1e-6)
        throw std::runtime_error("split_for_singular: angle grid exhausted without a valid split");
    const SymplecticMatrix S2 = rotation(n, best_theta);
    const SymplecticMatrix S1(S.entries() * S2.entries().transpose());
    return {S1, S2};
}

}  // namespace tfps
