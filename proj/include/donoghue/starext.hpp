#pragma once

#include <array>
#include <complex>
#include <utility>

namespace donoghue {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Coefficient data of a quasi-self-adjoint bi-extension with real von
/// Neumann parameter kappa and self-adjoint reference parameter U.
struct StarExtensionData {
    Complex H;
    Matrix2 S_A;
    Matrix2 S_Astar;
    Complex c_phi;
    Complex c_psi;
};

enum class HalfPlaneTag { plus, minus };

/// H = (i/(1-kappa^2)) ((kappa + conj U)/(1 + kappa conj U) + kappa).
/// At U = -1 this is -i/(1+kappa); at U = 1 it is i/(1-kappa).
Complex parameter_H(double kappa, Complex U);

/// The coefficient matrices
///   S_A     = [[H kappa, H], [kappa^2 H + i kappa, i + kappa H]],
///   S_Astar = [[kappa conj H - i, kappa^2 conj H - i kappa],
///              [conj H, conj H kappa]].
StarExtensionData bi_extension_matrices(double kappa, Complex U);

/// Delta = (1/(kappa^2 - 1)) [[kappa^2+1, 2 kappa], [-2 kappa, -kappa^2-1]];
/// satisfies Delta^2 = I and (S_A + S_Astar)/2 = i ((S_A - S_Astar)/(2i)) Delta.
Matrix2 involution_delta(double kappa);

/// Channel-vector coefficients over the deficiency basis:
///   c_phi = (kappa^2 + 1 + 2 kappa U) / (sqrt2 |1 + kappa U| sqrt(1 - kappa^2)),
///   c_psi = (kappa^2 U + 2 kappa + U) / (same denominator).
std::pair<Complex, Complex> channel_coefficients(double kappa, Complex U);

/// Re-expresses the channel coefficients after the deficiency basis is
/// multiplied by a unimodular phase: (c_phi, c_psi * phase).
std::pair<Complex, Complex> to_delta_basis(Complex c_phi, Complex c_psi, Complex phase);

/// Solves the 2x2 linear system whose rows are
///   (conj c_phi, conj c_psi | V) and
///   (-i sqrt(1-k^2)/(sqrt2 |1+kU|), i sqrt(1-k^2) conj(U)/(sqrt2 |1+kU|) | 1)
/// for the expansion coefficients (a_z, b_z). The coefficient determinant is
/// i conj(U). z_tag records which half-plane the impedance value came from.
std::pair<Complex, Complex> solve_impedance_system(double kappa, Complex U, Complex V_value,
                                                   HalfPlaneTag z_tag);

} // namespace donoghue
