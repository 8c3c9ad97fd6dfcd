// steady_state.hpp — Stability of the drift matrix and the steady-state
// covariance from the Lyapunov equation A V + V A^T = -D.

#pragma once

#include "magnomech/errors.hpp"
#include "magnomech/model.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace magnomech {

// Symmetrized covariance V_ij = <u_i u_j + u_j u_i>/2 over the quadrature
// ordering of model.hpp; vacuum normalization V = I/2.
struct CovarianceMatrix {
    Mat6 entries;
};

inline CovarianceMatrix symmetrized(const Mat6& raw) {
    return {0.5 * (raw + raw.transpose())};
}

struct StabilityVerdict {
    bool stable = false;
    double spectral_abscissa = 0.0; // max real part of the drift eigenvalues
};

// Abscissae in (-kStabilityMargin, 0] are classified unstable.
inline constexpr double kStabilityMargin = 1e-12;

inline StabilityVerdict check_stability(const DriftMatrix& a) {
    Eigen::EigenSolver<Mat6> solver(a.entries, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("check_stability: eigenvalue iteration failed");
    const double abscissa = solver.eigenvalues().real().maxCoeff();
    return {abscissa < -kStabilityMargin, abscissa};
}

// Relative Frobenius residual ||A V + V A^T + D||_F / ||D||_F.
inline double lyapunov_residual(const DriftMatrix& a, const DiffusionMatrix& d,
                                const CovarianceMatrix& v) {
    const Mat6 dm = d.entries();
    const Mat6 r = a.entries * v.entries + v.entries * a.entries.transpose() + dm;
    const double dnorm = dm.norm();
    return dnorm > 0.0 ? r.norm() / dnorm : r.norm();
}

inline constexpr double kLyapunovResidualTol = 1e-10;

// Solve A V + V A^T = -D by dense Kronecker vectorization,
// (I (x) A + A (x) I) vec(V) = -vec(D), a 36x36 LU solve with iterative
// refinement, followed by symmetrization.
inline CovarianceMatrix solve_lyapunov(const DriftMatrix& a, const DiffusionMatrix& d) {
    const StabilityVerdict verdict = check_stability(a);
    if (!verdict.stable)
        throw UnstableError("solve_lyapunov: drift matrix is not stable (spectral abscissa " +
                            std::to_string(verdict.spectral_abscissa) + ")");

    using Mat36 = Eigen::Matrix<double, 36, 36>;
    using Vec36 = Eigen::Matrix<double, 36, 1>;

    Mat36 op = Mat36::Zero();
    for (int j = 0; j < 6; ++j)
        op.block<6, 6>(6 * j, 6 * j) = a.entries;
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
            op.block<6, 6>(6 * j, 6 * k).diagonal().array() += a.entries(j, k);

    const Mat6 dm = d.entries();
    Vec36 rhs;
    for (int j = 0; j < 6; ++j)
        rhs.segment<6>(6 * j) = -dm.col(j);

    Eigen::FullPivLU<Mat36> lu(op);
    if (!lu.isInvertible())
        throw NumericalError("solve_lyapunov: singular vectorized system");
    Vec36 x = lu.solve(rhs);
    for (int pass = 0; pass < 2; ++pass)
        x -= lu.solve(Vec36(op * x - rhs));

    Mat6 v;
    for (int j = 0; j < 6; ++j)
        v.col(j) = x.segment<6>(6 * j);
    if (!v.allFinite())
        throw NumericalError("solve_lyapunov: non-finite solution");

    const CovarianceMatrix result = symmetrized(v);
    const double residual = lyapunov_residual(a, d, result);
    if (!(residual < kLyapunovResidualTol))
        throw NumericalError("solve_lyapunov: residual " + std::to_string(residual) +
                             " exceeds tolerance");
    return result;
}

// Any covariance entry beyond this is treated as divergence.
inline constexpr double kIntegrationDivergenceBound = 1e12;

// Independent oracle for the algebraic route: fixed-step classical RK4 on
// dV/dt = A V + V A^T + D from V(0) = I/2, symmetrized each step.
inline CovarianceMatrix integrate_lyapunov(const DriftMatrix& a, const DiffusionMatrix& d,
                                           double horizon, double step) {
    if (!(horizon > 0.0) || !(step > 0.0))
        throw std::invalid_argument("integrate_lyapunov: horizon and step must be > 0");

    const long nsteps = static_cast<long>(std::ceil(horizon / step));
    const double h = horizon / static_cast<double>(nsteps);
    const Mat6 dm = d.entries();
    const Mat6& am = a.entries;

    // A v + v A^T + D; v stays symmetric, so v A^T = (A v)^T
    auto flow = [&](const Mat6& v) -> Mat6 {
        const Mat6 av = am * v;
        return av + av.transpose() + dm;
    };

    Mat6 v = 0.5 * Mat6::Identity();
    for (long n = 0; n < nsteps; ++n) {
        const Mat6 k1 = flow(v);
        const Mat6 k2 = flow(v + (0.5 * h) * k1);
        const Mat6 k3 = flow(v + (0.5 * h) * k2);
        const Mat6 k4 = flow(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        v = 0.5 * (v + v.transpose());
        if (!(v.cwiseAbs().maxCoeff() < kIntegrationDivergenceBound))
            throw UnstableError("integrate_lyapunov: covariance diverged; drift matrix unstable?");
    }
    return {v};
}

} // namespace magnomech
