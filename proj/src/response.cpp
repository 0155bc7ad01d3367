#include "gyro/response.hpp"

#include <atomic>

namespace gyro {

namespace {
std::atomic<bool> g_chi_x_fault{false};
}

namespace testing {
void set_chi_x_fault(bool enabled) noexcept { g_chi_x_fault.store(enabled, std::memory_order_relaxed); }
bool chi_x_fault() noexcept { return g_chi_x_fault.load(std::memory_order_relaxed); }
}  // namespace testing

cplx chi_x_denominator(double delta, double omega_rot_sq, double gamma_x, double gamma_y) {
    const cplx idx(-0.5 * gamma_x, delta);
    const cplx idy(-0.5 * gamma_y, delta);
    const double coupling = testing::chi_x_fault() ? -omega_rot_sq : omega_rot_sq;
    return idx * idy + coupling;
}

cplx chi_x(double delta, double omega_rot_sq, double gamma_x, double gamma_y) {
    const cplx idy(-0.5 * gamma_y, delta);
    return idy / chi_x_denominator(delta, omega_rot_sq, gamma_x, gamma_y);
}

cplx chi_y(double delta, double gamma_y) { return 1.0 / cplx(-0.5 * gamma_y, delta); }

cplx dchi_x_domega2(double delta, double omega_rot_sq, double gamma_x, double gamma_y) {
    const cplx idy(-0.5 * gamma_y, delta);
    const cplx d = chi_x_denominator(delta, omega_rot_sq, gamma_x, gamma_y);
    return -idy / (d * d);
}

}  // namespace gyro
