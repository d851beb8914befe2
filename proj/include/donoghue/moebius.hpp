#pragma once

#include <complex>
#include <utility>

namespace donoghue {

using Complex = std::complex<double>;

/// Magnitude below which a fractional-linear denominator counts as a pole.
inline constexpr double kPoleGuard = 1e-12;

/// An angle alpha in [0, pi) together with the unimodular factor -e^{2i alpha}
/// that multiplies a transfer function under the corresponding rotation.
struct RotationAngle {
    double alpha;
    Complex unimodular_factor; // -exp(2i alpha)

    static RotationAngle from_alpha(double alpha);
};

/// W = (1 - iV) / (1 + iV)
Complex impedance_to_transfer(Complex v);

/// V = i (W - 1) / (W + 1)
Complex transfer_to_impedance(Complex w);

/// V_alpha = (cos a + sin a * V) / (sin a - cos a * V)
Complex rotate(Complex v, const RotationAngle& r);

/// Both angle roots of  Q tan^2 a - (Q^2 + a^2 - 1) tan a - Q = 0,
/// i.e. tan a = (b +- sqrt(b^2 + 4Q^2)) / (2Q) with b = Q^2 + a^2 - 1.
/// Returned in (+)-branch, (-)-branch order; for Q > 0 the (+) branch lies in
/// [0, pi/2) and the (-) branch in (pi/2, pi), swapped for Q < 0.
std::pair<RotationAngle, RotationAngle> solve_rotation_angles(double Q, double a);

/// Parameters (Q_alpha, a_alpha) of the rotated function:
///   Q_alpha = [(1/2)(1 - Q^2 - a^2) sin 2a - Q cos 2a] / D,
///   a_alpha = a / D,  D = (sin a - Q cos a)^2 + a^2 cos^2 a.
std::pair<double, double> rotated_parameters(double Q, double a, const RotationAngle& r);

/// The closed-form value a_alpha for the chosen sqrt branch:
///   [a (b +- s)^2 + 4 a Q^2] / [(b +- s - 2Q^2)^2 + 4 a^2 Q^2],
/// b = Q^2 + a^2 - 1, s = sqrt(b^2 + 4Q^2). sign = +1 or -1.
double branch_value(double a, double Q, int sign);

/// The claimed stationary point of the branch-inequality objective:
/// z0 = a^2 + a + 1 with value (16 - 16a)(a^2+a+1) for a < 1 and
/// (8a - 8)(a^2+a+1) for a > 1. The objective's numerical minimum sits
/// elsewhere; both stay above the bound 4a|1-a| that the inequality needs,
/// which is what the verification suite checks.
std::pair<double, double> branch_extremum_claim(double a);

/// The branch-inequality objective f(z), z = Q^2, for the matching branch:
/// ((1-a)d^2 - 4zd + 4z^2)/z with d = b - sqrt(b^2+4z) for a < 1, and
/// ((a-1)d^2 + 4zd - 4z^2)/z with d = b + sqrt(b^2+4z) for a > 1.
double branch_objective(double a, double z);

/// V_- = (1 + V) / (1 - V): the alpha = pi/4 limit rotation.
Complex limit_minus(Complex v);

/// V_+ = -(1 - V) / (1 + V): the alpha = 3pi/4 limit rotation.
Complex limit_plus(Complex v);

} // namespace donoghue
