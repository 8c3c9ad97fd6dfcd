// entanglement.hpp — Gaussian entanglement measures over the three-mode
// covariance: symplectic spectra, partial transposition, logarithmic
// negativities, contangles, and the minimum residual contangle.
//
// Conventions: vacuum covariance is I/2, so a state is physical iff
// V + (i/2) Omega >= 0, all symplectic eigenvalues are >= 1/2, and the
// logarithmic negativity is E_N = max[0, -ln(2 nu_min~)] with nu_min~ the
// smallest symplectic eigenvalue of the partially transposed covariance.

#pragma once

#include "magnomech/errors.hpp"
#include "magnomech/steady_state.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace magnomech {

// Mode labels in quadrature order: cavity (x_a, y_a), magnon (x_m, y_m),
// mechanics (q, p).
enum class Mode : int { cavity = 0, magnon = 1, mechanics = 2 };

inline constexpr std::array<Mode, 3> kAllModes{Mode::cavity, Mode::magnon, Mode::mechanics};

// Symplectic form for n modes, block-diagonal [[0,1],[-1,0]].
inline Eigen::MatrixXd symplectic_form(int n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

// Williamson spectrum of a symmetric even-dimensional matrix: the n positive
// values among |eig(i Omega V)|, ascending. The spectrum of Omega V comes in
// +-(i nu) pairs, so the sorted moduli carry each nu twice.
inline std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v) {
    const Eigen::Index dim = v.rows();
    if (dim == 0 || dim % 2 != 0 || v.cols() != dim)
        throw std::invalid_argument("symplectic_eigenvalues: need a square matrix of even dimension");
    const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw std::invalid_argument("symplectic_eigenvalues: matrix is not symmetric");

    const int n = static_cast<int>(dim) / 2;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(n) * v, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symplectic_eigenvalues: eigenvalue iteration failed");

    std::vector<double> moduli(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k)
        moduli[static_cast<std::size_t>(k)] = std::abs(solver.eigenvalues()(k));
    std::sort(moduli.begin(), moduli.end());

    std::vector<double> nu(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        nu[static_cast<std::size_t>(k)] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
    return nu;
}

// P V P with P flipping the momentum-like quadrature of each listed mode.
// The mode set must be a nonempty proper subset of the three modes.
inline CovarianceMatrix partial_transpose(const CovarianceMatrix& v, std::span<const Mode> modes) {
    std::array<bool, 3> flip{false, false, false};
    for (Mode m : modes)
        flip[static_cast<std::size_t>(m)] = true;
    const int count = static_cast<int>(flip[0]) + static_cast<int>(flip[1]) + static_cast<int>(flip[2]);
    if (count == 0 || count == 3)
        throw std::invalid_argument("partial_transpose: modes must be a nonempty proper subset");

    Vec6 p = Vec6::Ones();
    for (int k = 0; k < 3; ++k)
        if (flip[static_cast<std::size_t>(k)])
            p(2 * k + 1) = -1.0;
    return {p.asDiagonal() * v.entries * p.asDiagonal()};
}

inline CovarianceMatrix partial_transpose(const CovarianceMatrix& v, std::initializer_list<Mode> modes) {
    return partial_transpose(v, std::span<const Mode>(modes.begin(), modes.size()));
}

// Bipartition head|tail; the partial transpose acts on the head cell.
// Valid shapes are 1|1 (evaluated on the reduced two-mode covariance) and
// 1|2 (evaluated on the full three-mode covariance).
struct Partition {
    std::vector<Mode> head;
    std::vector<Mode> tail;

    static Partition one_one(Mode u, Mode v) { return {{u}, {v}}; }

    static Partition one_rest(Mode focus) {
        Partition p{{focus}, {}};
        for (Mode m : kAllModes)
            if (m != focus)
                p.tail.push_back(m);
        return p;
    }
};

namespace detail {

inline void validate_partition(const Partition& partition) {
    if (partition.head.size() != 1 || partition.tail.empty() || partition.tail.size() > 2)
        throw std::invalid_argument("log_negativity: partition must be 1|1 or 1|2");
    std::array<int, 3> seen{0, 0, 0};
    for (Mode m : partition.head)
        ++seen[static_cast<std::size_t>(m)];
    for (Mode m : partition.tail)
        ++seen[static_cast<std::size_t>(m)];
    if (seen[0] > 1 || seen[1] > 1 || seen[2] > 1)
        throw std::invalid_argument("log_negativity: partition cells must be disjoint");
}

// Delete rows/columns of absent modes; kept modes stay in quadrature order.
inline Eigen::MatrixXd reduced_covariance(const Mat6& v, std::span<const Mode> kept_sorted) {
    const auto n = static_cast<Eigen::Index>(kept_sorted.size());
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            out.block<2, 2>(2 * r, 2 * c) =
                v.block<2, 2>(2 * static_cast<int>(kept_sorted[static_cast<std::size_t>(r)]),
                              2 * static_cast<int>(kept_sorted[static_cast<std::size_t>(c)]));
    return out;
}

} // namespace detail

// Negativities below this are eigensolver round-off and collapse to exact 0.
inline constexpr double kLogNegativityFloor = 1e-12;

// Logarithmic negativity across the given bipartition.
inline double log_negativity(const CovarianceMatrix& v, const Partition& partition) {
    detail::validate_partition(partition);
    const Mode head = partition.head.front();

    Eigen::MatrixXd transposed;
    if (partition.tail.size() == 2) {
        transposed = partial_transpose(v, {head}).entries;
    } else {
        std::array<Mode, 2> kept{head, partition.tail.front()};
        std::sort(kept.begin(), kept.end());
        Eigen::MatrixXd red = detail::reduced_covariance(v.entries, kept);
        const Eigen::Index local = (kept[0] == head) ? 0 : 1;
        red.row(2 * local + 1) *= -1.0;
        red.col(2 * local + 1) *= -1.0;
        transposed = std::move(red);
    }

    const double nu_min = symplectic_eigenvalues(transposed).front();
    const double e = -std::log(2.0 * nu_min);
    return e < kLogNegativityFloor ? 0.0 : e;
}

// Contangle: squared logarithmic negativity.
inline double contangle(const CovarianceMatrix& v, const Partition& partition) {
    const double e = log_negativity(v, partition);
    return e * e;
}

// Residual contangle C_{i|jk} - C_{i|j} - C_{i|k} for the focus mode i.
inline double residual_contangle(const CovarianceMatrix& v, Mode focus) {
    const Partition full = Partition::one_rest(focus);
    double r = contangle(v, full);
    for (Mode other : full.tail)
        r -= contangle(v, Partition::one_one(focus, other));
    return r;
}

// Negative residuals within this magnitude are numerical zeros.
inline constexpr double kMonogamyClampTol = 1e-9;

// Minimum of the three residual contangles; a positive value witnesses
// genuine tripartite entanglement. Tiny negative values are clamped to 0;
// larger negatives are returned as-is as a monogamy-violation diagnostic.
inline double min_residual_contangle(const CovarianceMatrix& v) {
    double r = residual_contangle(v, Mode::magnon);
    r = std::min(r, residual_contangle(v, Mode::mechanics));
    r = std::min(r, residual_contangle(v, Mode::cavity));
    if (r < 0.0 && r > -kMonogamyClampTol)
        return 0.0;
    return r;
}

// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega; >= 0 (up to
// round-off) exactly when V is a physical quantum covariance.
inline double physicality_margin(const CovarianceMatrix& v) {
    using Cplx = std::complex<double>;
    Eigen::MatrixXcd herm = v.entries.cast<Cplx>() + Cplx(0.0, 0.5) * symplectic_form(3).cast<Cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("physicality_margin: eigenvalue iteration failed");
    return solver.eigenvalues().minCoeff();
}

// Measures of one stable parameter point.
struct EntanglementMeasures {
    double e_ab = 0.0;  // cavity-mechanics
    double e_am = 0.0;  // cavity-magnon
    double e_mb = 0.0;  // magnon-mechanics
    double r_min = 0.0; // minimum residual contangle
    double lyapunov_residual = 0.0;
};

// Result of the full pipeline at one parameter point; measures are absent
// when the point is dynamically unstable.
struct EntanglementReport {
    bool stable = false;
    double spectral_abscissa = 0.0;
    std::optional<EntanglementMeasures> measures;
};

} // namespace magnomech
