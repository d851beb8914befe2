#include "donoghue/starext.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace donoghue {

namespace {

void check_kappa_U(double kappa, Complex U, const char* who) {
    if (!(kappa >= 0.0) || !(kappa < 1.0))
        throw std::invalid_argument(std::string(who) + ": requires kappa in [0,1)");
    if (std::abs(std::abs(U) - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(who) + ": U must be unimodular");
}

} // namespace

Complex parameter_H(double kappa, Complex U) {
    check_kappa_U(kappa, U, "parameter_H");
    const Complex Ubar = std::conj(U);
    const Complex den = 1.0 + kappa * Ubar;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("parameter_H: 1 + kappa conj(U) vanishes");
    return Complex(0.0, 1.0) / (1.0 - kappa * kappa) * ((kappa + Ubar) / den + kappa);
}

StarExtensionData bi_extension_matrices(double kappa, Complex U) {
    const Complex H = parameter_H(kappa, U);
    const Complex Hbar = std::conj(H);
    const Complex i(0.0, 1.0);
    StarExtensionData d{};
    d.H = H;
    d.S_A = {{{H * kappa, H}, {kappa * kappa * H + i * kappa, i + kappa * H}}};
    d.S_Astar = {{{kappa * Hbar - i, kappa * kappa * Hbar - i * kappa}, {Hbar, Hbar * kappa}}};
    auto [c_phi, c_psi] = channel_coefficients(kappa, U);
    d.c_phi = c_phi;
    d.c_psi = c_psi;
    return d;
}

Matrix2 involution_delta(double kappa) {
    if (kappa == 1.0)
        throw std::invalid_argument("involution_delta: kappa = 1 is degenerate");
    const double f = 1.0 / (kappa * kappa - 1.0);
    return {{{f * (kappa * kappa + 1.0), f * 2.0 * kappa},
             {-f * 2.0 * kappa, -f * (kappa * kappa + 1.0)}}};
}

std::pair<Complex, Complex> channel_coefficients(double kappa, Complex U) {
    check_kappa_U(kappa, U, "channel_coefficients");
    const double den =
        std::sqrt(2.0) * std::abs(1.0 + kappa * U) * std::sqrt(1.0 - kappa * kappa);
    if (den < 1e-12)
        throw std::domain_error("channel_coefficients: degenerate denominator");
    const Complex c_phi = (kappa * kappa + 1.0 + 2.0 * kappa * U) / den;
    const Complex c_psi = (kappa * kappa * U + 2.0 * kappa + U) / den;
    return {c_phi, c_psi};
}

std::pair<Complex, Complex> to_delta_basis(Complex c_phi, Complex c_psi, Complex phase) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-9)
        throw std::invalid_argument("to_delta_basis: phase must be unimodular");
    return {c_phi, c_psi * phase};
}

std::pair<Complex, Complex> solve_impedance_system(double kappa, Complex U, Complex V_value,
                                                   HalfPlaneTag) {
    check_kappa_U(kappa, U, "solve_impedance_system");
    auto [c_phi, c_psi] = channel_coefficients(kappa, U);
    const Complex i(0.0, 1.0);
    const double norm = std::sqrt(1.0 - kappa * kappa) / (std::sqrt(2.0) * std::abs(1.0 + kappa * U));
    const Complex m11 = std::conj(c_phi);
    const Complex m12 = std::conj(c_psi);
    const Complex m21 = -i * norm;
    const Complex m22 = i * norm * std::conj(U);
    const Complex det = m11 * m22 - m12 * m21;
    const Complex a_z = (V_value * m22 - m12) / det;
    const Complex b_z = (m11 - V_value * m21) / det;
    return {a_z, b_z};
}

} // namespace donoghue
