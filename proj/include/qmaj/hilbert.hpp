#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "qmaj/bloch.hpp"
#include "qmaj/scan.hpp"
#include "qmaj/statistics.hpp"

namespace qmaj::hilbert {

using cplx = std::complex<double>;

/// Row-major dense square matrix, dimension fixed at compile time. Sizes
/// here are 2 (system or apparatus alone) and 4 (the product space), so
/// everything stays on the stack.
template <std::size_t N>
using Mat = std::array<cplx, N * N>;

template <std::size_t N>
using Vec = std::array<cplx, N>;

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;
using Vec2 = Vec<2>;

constexpr double kHermitianTol = 1e-12;
constexpr double kUnitaryTol = 1e-12;
constexpr double kPositivityTol = 1e-10;

/// Side length of a square matrix stored in M entries; lets the helpers
/// deduce the dimension from the flat array size.
constexpr std::size_t matrix_dim(std::size_t total) {
    std::size_t n = 0;
    while (n * n < total) {
        ++n;
    }
    return n;
}

template <std::size_t N>
Mat<N> identity() {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i) {
        m[i * N + i] = 1.0;
    }
    return m;
}

template <std::size_t M>
std::array<cplx, M> matmul(const std::array<cplx, M>& a,
                           const std::array<cplx, M>& b) {
    constexpr std::size_t N = matrix_dim(M);
    static_assert(N * N == M);
    std::array<cplx, M> c{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const cplx aik = a[i * N + k];
            for (std::size_t j = 0; j < N; ++j) {
                c[i * N + j] += aik * b[k * N + j];
            }
        }
    }
    return c;
}

template <std::size_t M>
std::array<cplx, M> adjoint(const std::array<cplx, M>& a) {
    constexpr std::size_t N = matrix_dim(M);
    std::array<cplx, M> c{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            c[j * N + i] = std::conj(a[i * N + j]);
        }
    }
    return c;
}

template <std::size_t M>
cplx trace(const std::array<cplx, M>& a) {
    constexpr std::size_t N = matrix_dim(M);
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        t += a[i * N + i];
    }
    return t;
}

template <std::size_t M>
double max_abs_diff(const std::array<cplx, M>& a,
                    const std::array<cplx, M>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Mat4 kron(const Mat2& a, const Mat2& b);

template <std::size_t N>
Mat<N> outer(const Vec<N>& u, const Vec<N>& v) {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            m[i * N + j] = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

template <std::size_t M>
bool is_hermitian(const std::array<cplx, M>& a, double tol = kHermitianTol) {
    return max_abs_diff(a, adjoint(a)) <= tol;
}

template <std::size_t M>
bool is_unitary(const std::array<cplx, M>& a, double tol = kUnitaryTol) {
    return max_abs_diff(matmul(adjoint(a), a), identity<matrix_dim(M)>()) <= tol;
}

namespace detail {

// Real symmetric cyclic Jacobi; used on the 2N x 2N real embedding of a
// complex Hermitian matrix.
template <std::size_t M>
std::array<double, M> jacobi_eigenvalues(std::array<double, M * M> a) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < M; ++p) {
            for (std::size_t q = p + 1; q < M; ++q) {
                off += a[p * M + q] * a[p * M + q];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < M; ++p) {
            for (std::size_t q = p + 1; q < M; ++q) {
                const double apq = a[p * M + q];
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double tau = (a[q * M + q] - a[p * M + p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < M; ++i) {
                    const double aip = a[i * M + p];
                    const double aiq = a[i * M + q];
                    a[i * M + p] = c * aip - s * aiq;
                    a[i * M + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < M; ++i) {
                    const double api = a[p * M + i];
                    const double aqi = a[q * M + i];
                    a[p * M + i] = c * api - s * aqi;
                    a[q * M + i] = s * api + c * aqi;
                }
            }
        }
    }
    std::array<double, M> eig{};
    for (std::size_t i = 0; i < M; ++i) {
        eig[i] = a[i * M + i];
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace detail

/// Eigenvalues of a Hermitian matrix, ascending. The complex matrix
/// A = X + iY is embedded as the real symmetric [[X, -Y], [Y, X]], whose
/// spectrum is that of A doubled.
template <std::size_t M>
std::array<double, matrix_dim(M)> hermitian_eigenvalues(
    const std::array<cplx, M>& m) {
    constexpr std::size_t N = matrix_dim(M);
    std::array<double, 4 * M> embed{};
    const auto real_at = [&](std::size_t i, std::size_t j) -> double& {
        return embed[i * 2 * N + j];
    };
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const cplx v = m[i * N + j];
            real_at(i, j) = v.real();
            real_at(i + N, j + N) = v.real();
            real_at(i, j + N) = -v.imag();
            real_at(i + N, j) = v.imag();
        }
    }
    const auto doubled = detail::jacobi_eigenvalues<2 * N>(embed);
    std::array<double, N> eig{};
    for (std::size_t i = 0; i < N; ++i) {
        eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eig;
}

/// rho = (I + s.sigma)/2 as a dense matrix in the sigma_z eigenbasis.
Mat2 density_matrix(const BlochState& state);

/// The concrete realization of the measurement model: apparatus states
/// a+- with overlap cos(delta), chosen real and symmetric about the first
/// axis, and the orthonormal minimum-noise projection basis b+-.
struct ApparatusVectors {
    Vec2 a_plus, a_minus;
    Vec2 b_plus, b_minus;
    double phi_angle; // pi/2 - delta
};

ApparatusVectors build_apparatus(const MeasurementConfig& cfg);

/// The system-apparatus coupling U = |+><+| (x) U+ + |-><-| (x) U-, with
/// U+- the planar rotations taking the fiducial apparatus state (1, 0) to
/// a+-.
Mat4 coupling_unitary(const MeasurementConfig& cfg);

/// Joint outcome probabilities from first principles:
///   p_{j,k} = Tr[ U (rho (x) |a><a|) U^dag (Pi^x_j (x) |b_k><b_k|) ].
/// Never evaluates the closed-form expression it is used to verify.
JointStats oracle_joint_probs(const BlochState& state,
                              const MeasurementConfig& cfg);

/// Gauge-explicit variant: same trace formula with caller-supplied
/// coupling rotations and projection basis.
JointStats oracle_joint_probs(const BlochState& state, const Mat2& u_plus,
                              const Mat2& u_minus, const Vec2& b_plus,
                              const Vec2& b_minus);

/// Worst absolute disagreement between the oracle and the closed-form
/// joint and marginal statistics over `trials` seeded random (state,
/// delta) draws. Parameters are pre-generated so Serial and Parallel
/// check the same sample set.
double batch_deviation(std::size_t trials, std::uint64_t seed,
                       scan::Exec exec = scan::Exec::Parallel);

} // namespace qmaj::hilbert
