#include "gyro/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "gyro/errors.hpp"
#include "gyro/spectra.hpp"

namespace gyro::oracle {

namespace {

constexpr cplx kI{0.0, 1.0};

double coupling_from_co(const GyroParams& p, double co) {
    if (!(co >= 0.0) || !std::isfinite(co)) throw GyroError(ErrorKind::InvalidArgument, "co must be >= 0");
    return std::sqrt(co * p.kappa * p.gamma_x) / 2.0;
}

// Row of the photocurrent I = (alpha_in + alpha_in^dag) + sqrt(kappa) (a + a^dag) over the inputs.
Eigen::Matrix<cplx, 1, 6> photocurrent_row(const Matrix6c& transfer, double kappa) {
    Eigen::Matrix<cplx, 1, 6> row = std::sqrt(kappa) * (transfer.row(kA) + transfer.row(kADag));
    row(0) += 1.0;
    row(1) += 1.0;
    return row;
}

Eigen::Matrix<cplx, 1, 6> quadrature_row(const Matrix6c& transfer) {
    return transfer.row(kBx) + transfer.row(kBxDag);
}

// N(omega) = sum_jk c_j(omega) K_jk c_k(-omega), from <u_j(w) u_k(w')> = 2 pi delta(w + w') K_jk.
cplx contract(const Eigen::Matrix<cplx, 1, 6>& at_w, const Matrix6c& k, const Eigen::Matrix<cplx, 1, 6>& at_minus_w) {
    return (at_w * k * at_minus_w.transpose())(0, 0);
}

}  // namespace

Matrix6c drift_matrix(const GyroParams& p, double co, double omega_rot_sq) {
    if (!(omega_rot_sq >= 0.0)) throw GyroError(ErrorKind::InvalidArgument, "Omega^2 must be >= 0");
    const double g = coupling_from_co(p, co);
    const double omega = std::sqrt(omega_rot_sq);
    const double wb = p.omega_b;

    Matrix6c a = Matrix6c::Zero();
    a(kA, kA) = -0.5 * p.kappa;
    a(kA, kBx) = -g;
    a(kA, kBxDag) = -g;
    a(kADag, kADag) = -0.5 * p.kappa;
    a(kADag, kBx) = -g;
    a(kADag, kBxDag) = -g;

    a(kBx, kBx) = cplx(-0.5 * p.gamma_x, -wb);
    a(kBx, kA) = g;
    a(kBx, kADag) = -g;
    a(kBx, kBy) = omega;
    a(kBxDag, kBxDag) = cplx(-0.5 * p.gamma_x, wb);
    a(kBxDag, kADag) = g;
    a(kBxDag, kA) = -g;
    a(kBxDag, kByDag) = omega;

    a(kBy, kBy) = cplx(-0.5 * p.gamma_y, -wb);
    a(kBy, kBx) = -omega;
    a(kByDag, kByDag) = cplx(-0.5 * p.gamma_y, wb);
    a(kByDag, kBxDag) = -omega;
    return a;
}

Matrix6d input_matrix(const GyroParams& p) {
    Matrix6d b = Matrix6d::Zero();
    b(0, 0) = b(1, 1) = -std::sqrt(p.kappa);
    b(2, 2) = b(3, 3) = -std::sqrt(p.gamma_x);
    b(4, 4) = b(5, 5) = -std::sqrt(p.gamma_y);
    return b;
}

Matrix6c input_correlation(const InputField& input, double n_th, const OracleOptions& options) {
    if (!(n_th >= 0.0)) throw GyroError(ErrorKind::InvalidArgument, "n_th must be >= 0");
    const double r = squeeze_r(input);
    if (r < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "r must be >= 0");
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    const double anomalous = options.quadrature == SqueezedQuadrature::Amplitude ? -sh * ch : sh * ch;

    Matrix6c k = Matrix6c::Zero();
    k(0, 1) = ch * ch;  // <a_in a_in^dag>
    k(1, 0) = sh * sh;  // <a_in^dag a_in>
    k(0, 0) = anomalous;
    k(1, 1) = std::conj(cplx(anomalous));
    k(2, 3) = n_th + 1.0;
    k(3, 2) = n_th;
    k(4, 5) = n_th + 1.0;
    k(5, 4) = n_th;
    return k;
}

Matrix6c exact_transfer_matrix(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq) {
    const GyroParams& p = cfg.params;
    const Matrix6c system = -kI * omega * Matrix6c::Identity() - drift_matrix(p, co, omega_rot_sq);
    Eigen::PartialPivLU<Matrix6c> lu(system);
    if (!(lu.rcond() > 1.0e-14)) {
        throw GyroError(ErrorKind::SingularSystem, "system matrix is numerically singular at omega = " +
                                                       std::to_string(omega));
    }
    return lu.solve(input_matrix(p).cast<cplx>());
}

cplx exact_photocurrent_psd_raw(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                const InputField& input, const OracleOptions& options) {
    const double kappa = cfg.params.kappa;
    const Matrix6c k = input_correlation(input, cfg.params.n_th, options);
    const auto at_w = photocurrent_row(exact_transfer_matrix(omega, cfg, co, omega_rot_sq), kappa);
    const auto at_minus_w = photocurrent_row(exact_transfer_matrix(-omega, cfg, co, omega_rot_sq), kappa);
    return contract(at_w, k, at_minus_w);
}

double exact_photocurrent_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                              const InputField& input, const OracleOptions& options) {
    const cplx pos = exact_photocurrent_psd_raw(omega, cfg, co, omega_rot_sq, input, options);
    const cplx neg = exact_photocurrent_psd_raw(-omega, cfg, co, omega_rot_sq, input, options);
    return 0.5 * (pos + neg).real();
}

double exact_quadrature_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                            const InputField& input, const OracleOptions& options) {
    const Matrix6c k = input_correlation(input, cfg.params.n_th, options);
    const auto x_pos = quadrature_row(exact_transfer_matrix(omega, cfg, co, omega_rot_sq));
    const auto x_neg = quadrature_row(exact_transfer_matrix(-omega, cfg, co, omega_rot_sq));
    return 0.5 * (contract(x_pos, k, x_neg) + contract(x_neg, k, x_pos)).real();
}

Matrix6c quadrature_transform() {
    Matrix6c q = Matrix6c::Zero();
    for (int pair = 0; pair < 3; ++pair) {
        const int o = 2 * pair;
        q(o, o) = 1.0;
        q(o, o + 1) = 1.0;
        q(o + 1, o) = -kI;
        q(o + 1, o + 1) = kI;
    }
    return q;
}

Matrix6d quadrature_drift(const GyroParams& params, double co, double omega_rot_sq) {
    const Matrix6c q = quadrature_transform();
    const Matrix6c aq = q * drift_matrix(params, co, omega_rot_sq) * q.inverse();
    return aq.real();
}

Matrix6d quadrature_diffusion(const InputField& input, double n_th, const OracleOptions& options) {
    const Matrix6c q = quadrature_transform();
    const Matrix6c kq = q * input_correlation(input, n_th, options) * q.transpose();
    return (0.5 * (kq + kq.transpose())).real();
}

Matrix6d solve_lyapunov(const Matrix6d& drift, const Matrix6d& diffusion) {
    const Eigen::EigenSolver<Matrix6d> eig(drift, false);
    for (int i = 0; i < 6; ++i) {
        if (!(eig.eigenvalues()(i).real() < 0.0)) {
            throw GyroError(ErrorKind::UnstableSystem, "drift matrix has an eigenvalue with non-negative real part");
        }
    }
    // (I (x) A + A (x) I) vec(S) = -vec(Q), column-major vec
    constexpr int n = 6;
    Eigen::Matrix<double, n * n, n * n> kron = Eigen::Matrix<double, n * n, n * n>::Zero();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                kron(j * n + i, j * n + k) += drift(i, k);  // A S
                kron(j * n + i, k * n + i) += drift(j, k);  // S A^T
            }
        }
    }
    Eigen::Matrix<double, n * n, 1> rhs;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) rhs(j * n + i) = -diffusion(i, j);
    const Eigen::Matrix<double, n * n, 1> vec = kron.fullPivLu().solve(rhs);

    Matrix6d s;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) s(i, j) = vec(j * n + i);
    return 0.5 * (s + s.transpose());
}

Matrix6d steady_state_covariance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input,
                                 const OracleOptions& options) {
    const GyroParams& p = cfg.params;
    const Matrix6d b = input_matrix(p);
    const Matrix6d diffusion = b * quadrature_diffusion(input, p.n_th, options) * b.transpose();
    return solve_lyapunov(quadrature_drift(p, co, omega_rot_sq), diffusion);
}

double spectral_variance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input) {
    using boost::math::quadrature::gauss_kronrod;
    const GyroParams& p = cfg.params;
    const double gamma = std::max(p.gamma_x, p.gamma_y);
    const double half_width = std::min(1.0e3 * gamma, 0.5 * p.omega_b);
    auto density = [&](double w) { return noise_budget(w, cfg, co, omega_rot_sq, input).n_x; };

    // N̄_X is even in omega; integrate [0, inf) and double. The window around
    // omega_b is split at the peak so the adaptive rule sees it.
    constexpr double tol = 1.0e-12;
    constexpr unsigned depth = 25;
    const double lo = p.omega_b - half_width;
    const double hi = p.omega_b + half_width;
    double total = 0.0;
    total += gauss_kronrod<double, 61>::integrate(density, 0.0, lo, depth, tol);
    total += gauss_kronrod<double, 61>::integrate(density, lo, p.omega_b, depth, tol);
    total += gauss_kronrod<double, 61>::integrate(density, p.omega_b, hi, depth, tol);
    total += gauss_kronrod<double, 61>::integrate(density, hi, std::numeric_limits<double>::infinity(), depth, tol);
    return total / M_PI;
}

VarianceComparison steady_state_variance(const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                         const InputField& input, const OracleOptions& options) {
    VarianceComparison out;
    out.lyapunov = steady_state_covariance(cfg, co, omega_rot_sq, input, options)(2, 2);
    out.spectral = spectral_variance(cfg, co, omega_rot_sq, input);
    out.relative_difference = std::abs(out.spectral - out.lyapunov) / std::abs(out.lyapunov);
    return out;
}

}  // namespace gyro::oracle
