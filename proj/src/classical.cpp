#include "gyro/classical.hpp"

#include <algorithm>
#include <cmath>

#include "gyro/errors.hpp"

namespace gyro::classical {

namespace {

constexpr double kHbar = 1.054571817e-34;

ClassicalState axpy(const ClassicalState& s, double h, const ClassicalState& d) {
    return ClassicalState{s.x + h * d.x, s.y + h * d.y, s.px + h * d.px, s.py + h * d.py, s.frame};
}

template <class Rhs>
ClassicalState rk4_step(const ClassicalState& s, double t, double dt, Rhs&& rhs) {
    const ClassicalState k1 = rhs(s, t);
    const ClassicalState k2 = rhs(axpy(s, 0.5 * dt, k1), t + 0.5 * dt);
    const ClassicalState k3 = rhs(axpy(s, 0.5 * dt, k2), t + 0.5 * dt);
    const ClassicalState k4 = rhs(axpy(s, dt, k3), t + dt);
    ClassicalState out = s;
    out.x += dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    out.y += dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    out.px += dt / 6.0 * (k1.px + 2.0 * k2.px + 2.0 * k3.px + k4.px);
    out.py += dt / 6.0 * (k1.py + 2.0 * k2.py + 2.0 * k3.py + k4.py);
    return out;
}

// Body-frame displacement from the spring anchor: (x - x_e, y - y_e) with (x, y) = R(theta) r_o.
void body_displacement(const ClassicalState& s, const OscillatorSpec& spec, double theta, double& u, double& w) {
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    u = c * s.x + sn * s.y - spec.x_e;
    w = -sn * s.x + c * s.y - spec.y_e;
}

}  // namespace

double OscillatorSpec::omega_x() const { return std::sqrt(k_x / mass); }
double OscillatorSpec::omega_y() const { return std::sqrt(k_y / mass); }

double zero_point_amplitude(double mass, double omega_b) { return std::sqrt(kHbar / (2.0 * mass * omega_b)); }

ClassicalState to_rotating(const ClassicalState& s, double theta) {
    if (s.frame != Frame::Inertial) throw GyroError(ErrorKind::InvalidArgument, "state is not in the inertial frame");
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    return ClassicalState{c * s.x + sn * s.y, -sn * s.x + c * s.y, c * s.px + sn * s.py, -sn * s.px + c * s.py,
                          Frame::Rotating};
}

ClassicalState to_inertial(const ClassicalState& s, double theta) {
    if (s.frame != Frame::Rotating) throw GyroError(ErrorKind::InvalidArgument, "state is not in the rotating frame");
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    return ClassicalState{c * s.x - sn * s.y, sn * s.x + c * s.y, c * s.px - sn * s.py, sn * s.px + c * s.py,
                          Frame::Inertial};
}

ClassicalState inertial_rhs(const ClassicalState& s, const OscillatorSpec& spec, double theta) {
    double u = 0.0;
    double w = 0.0;
    body_displacement(s, spec, theta, u, w);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const double dv_dx = spec.k_x * u * c - spec.k_y * w * sn;
    const double dv_dy = spec.k_x * u * sn + spec.k_y * w * c;
    return ClassicalState{s.px / spec.mass, s.py / spec.mass, -dv_dx, -dv_dy, Frame::Inertial};
}

ClassicalState rotating_rhs(const ClassicalState& s, const OscillatorSpec& spec, double omega_rot,
                            RotatingModel model) {
    const double m = spec.mass;
    const double vx = (s.px + m * omega_rot * s.y) / m;
    const double vy = (s.py - m * omega_rot * s.x) / m;
    double fx = omega_rot * (s.py - m * omega_rot * s.x) - spec.k_x * (s.x - spec.x_e);
    double fy = -omega_rot * (s.px + m * omega_rot * s.y) - spec.k_y * (s.y - spec.y_e);
    if (model == RotatingModel::Full) {
        fx += m * omega_rot * omega_rot * s.x;
        fy += m * omega_rot * omega_rot * s.y;
    }
    return ClassicalState{vx, vy, fx, fy, Frame::Rotating};
}

double inertial_energy(const ClassicalState& s, const OscillatorSpec& spec, double theta) {
    double u = 0.0;
    double w = 0.0;
    body_displacement(s, spec, theta, u, w);
    return (s.px * s.px + s.py * s.py) / (2.0 * spec.mass) + 0.5 * (spec.k_x * u * u + spec.k_y * w * w);
}

double rotating_hamiltonian(const ClassicalState& s, const OscillatorSpec& spec, double omega_rot,
                            RotatingModel model) {
    const double m = spec.mass;
    const double kx = s.px + m * omega_rot * s.y;
    const double ky = s.py - m * omega_rot * s.x;
    double h = (kx * kx + ky * ky) / (2.0 * m) +
               0.5 * (spec.k_x * (s.x - spec.x_e) * (s.x - spec.x_e) + spec.k_y * (s.y - spec.y_e) * (s.y - spec.y_e));
    if (model == RotatingModel::Full) h -= 0.5 * m * omega_rot * omega_rot * (s.x * s.x + s.y * s.y);
    return h;
}

FrameCheckResult rotating_frame_check(const ClassicalState& initial, const OscillatorSpec& spec, double omega_rot,
                                      double duration, double dt, const FrameCheckOptions& options) {
    if (!(spec.mass > 0.0) || !(spec.k_x > 0.0) || !(spec.k_y > 0.0)) {
        throw GyroError(ErrorKind::NonPositiveRate, "mass and spring constants must be positive");
    }
    if (!(dt > 0.0) || !(duration > 0.0)) throw GyroError(ErrorKind::InvalidArgument, "dt and duration must be > 0");
    const double fastest = std::max({spec.omega_x(), spec.omega_y(), std::abs(omega_rot)});
    if (dt * fastest >= 0.1) {
        throw GyroError(ErrorKind::StepTooLarge, "dt * max(omega_x, omega_y, |Omega|) = " +
                                                     std::to_string(dt * fastest) + " must be < 0.1");
    }

    ClassicalState rot = initial.frame == Frame::Rotating ? initial : to_rotating(initial, 0.0);
    ClassicalState inert = to_inertial(rot, 0.0);

    auto inertial_f = [&](const ClassicalState& s, double t) { return inertial_rhs(s, spec, omega_rot * t); };
    auto rotating_f = [&](const ClassicalState& s, double) { return rotating_rhs(s, spec, omega_rot, options.model); };

    const auto steps = static_cast<std::size_t>(std::llround(duration / dt));
    const double m = spec.mass;
    const double e0 = inertial_energy(inert, spec, 0.0);

    FrameCheckResult res;
    res.steps = steps;
    double max_p = std::hypot(rot.px, rot.py);
    double max_residual = 0.0;
    double max_energy_dev = 0.0;

    auto track = [&](const ClassicalState& r, const ClassicalState& o, double t) {
        const double theta = omega_rot * t;
        const ClassicalState mapped = to_rotating(o, theta);
        res.max_deviation = std::max(res.max_deviation, std::hypot(r.x - mapped.x, r.y - mapped.y));
        const double c = std::cos(theta);
        const double sn = std::sin(theta);
        const double anchor_x = c * spec.x_e - sn * spec.y_e;
        const double anchor_y = sn * spec.x_e + c * spec.y_e;
        res.amplitude = std::max(res.amplitude, std::hypot(o.x - anchor_x, o.y - anchor_y));
        max_energy_dev = std::max(max_energy_dev, std::abs(inertial_energy(o, spec, theta) - e0));
    };

    track(rot, inert, 0.0);
    if (options.record_stride > 0) res.trajectory.push_back({0.0, rot, inert});
    ClassicalState prev = rot;
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const ClassicalState next_rot = rk4_step(rot, t, dt, rotating_f);
        inert = rk4_step(inert, t, dt, inertial_f);
        if (i > 0) {
            // canonical momentum identity at the current point, velocity by central difference
            const double vx = (next_rot.x - prev.x) / (2.0 * dt);
            const double vy = (next_rot.y - prev.y) / (2.0 * dt);
            const double rx = rot.px - (m * vx - m * omega_rot * rot.y);
            const double ry = rot.py - (m * vy + m * omega_rot * rot.x);
            max_residual = std::max(max_residual, std::hypot(rx, ry));
        }
        prev = rot;
        rot = next_rot;
        max_p = std::max(max_p, std::hypot(rot.px, rot.py));
        track(rot, inert, static_cast<double>(i + 1) * dt);
        if (options.record_stride > 0 && (i + 1) % options.record_stride == 0) {
            res.trajectory.push_back({static_cast<double>(i + 1) * dt, rot, inert});
        }
    }

    res.max_momentum_residual = max_p > 0.0 ? max_residual / max_p : max_residual;
    res.energy_drift = e0 > 0.0 ? max_energy_dev / e0 : max_energy_dev;
    return res;
}

}  // namespace gyro::classical
