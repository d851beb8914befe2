#include "donoghue/moebius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace donoghue {

namespace {

const double kPi = std::numbers::pi;

double normalize_angle(double alpha) {
    double a = std::fmod(alpha, kPi);
    if (a < 0.0)
        a += kPi;
    if (a >= kPi)
        a = 0.0;
    return a;
}

Complex guarded_div(Complex num, Complex den, const char* what) {
    if (std::abs(den) < kPoleGuard)
        throw std::domain_error(what);
    return num / den;
}

} // namespace

RotationAngle RotationAngle::from_alpha(double alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("RotationAngle: alpha must be finite");
    const double a = normalize_angle(alpha);
    return {a, -std::exp(Complex(0.0, 2.0 * a))};
}

Complex impedance_to_transfer(Complex v) {
    const Complex i(0.0, 1.0);
    return guarded_div(1.0 - i * v, 1.0 + i * v, "impedance_to_transfer: pole at V = i");
}

Complex transfer_to_impedance(Complex w) {
    const Complex i(0.0, 1.0);
    return guarded_div(i * (w - 1.0), w + 1.0, "transfer_to_impedance: pole at W = -1");
}

Complex rotate(Complex v, const RotationAngle& r) {
    const double c = std::cos(r.alpha);
    const double s = std::sin(r.alpha);
    return guarded_div(c + s * v, s - c * v, "rotate: pole at V = tan(alpha)");
}

std::pair<RotationAngle, RotationAngle> solve_rotation_angles(double Q, double a) {
    if (Q == 0.0)
        throw std::invalid_argument("solve_rotation_angles: requires Q != 0");
    if (!(a > 0.0))
        throw std::invalid_argument("solve_rotation_angles: requires a > 0");
    const double b = Q * Q + a * a - 1.0;
    const double r = std::sqrt(b * b + 4.0 * Q * Q);
    const double tan_plus = (b + r) / (2.0 * Q);
    const double tan_minus = (b - r) / (2.0 * Q);
    return {RotationAngle::from_alpha(std::atan(tan_plus)),
            RotationAngle::from_alpha(std::atan(tan_minus))};
}

std::pair<double, double> rotated_parameters(double Q, double a, const RotationAngle& r) {
    const double c = std::cos(r.alpha);
    const double s = std::sin(r.alpha);
    const double d = (s - Q * c) * (s - Q * c) + a * a * c * c;
    if (d < kPoleGuard)
        throw std::domain_error("rotated_parameters: degenerate rotation");
    const double q_alpha =
        (0.5 * (1.0 - Q * Q - a * a) * std::sin(2.0 * r.alpha) - Q * std::cos(2.0 * r.alpha)) / d;
    return {q_alpha, a / d};
}

double branch_value(double a, double Q, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("branch_value: sign must be +1 or -1");
    const double b = Q * Q + a * a - 1.0;
    const double s = std::sqrt(b * b + 4.0 * Q * Q);
    const double t = b + sign * s;
    const double num = a * t * t + 4.0 * a * Q * Q;
    const double den = (t - 2.0 * Q * Q) * (t - 2.0 * Q * Q) + 4.0 * a * a * Q * Q;
    if (den < kPoleGuard)
        throw std::domain_error("branch_value: degenerate denominator");
    return num / den;
}

std::pair<double, double> branch_extremum_claim(double a) {
    if (!(a > 0.0) || a == 1.0)
        throw std::invalid_argument("branch_extremum_claim: requires a > 0, a != 1");
    const double z0 = a * a + a + 1.0;
    const double f0 = (a < 1.0) ? (16.0 - 16.0 * a) * z0 : (8.0 * a - 8.0) * z0;
    return {z0, f0};
}

double branch_objective(double a, double z) {
    if (!(a > 0.0) || a == 1.0)
        throw std::invalid_argument("branch_objective: requires a > 0, a != 1");
    if (!(z > 0.0))
        throw std::invalid_argument("branch_objective: requires z > 0");
    const double b = z + a * a - 1.0;
    const double s = std::sqrt(b * b + 4.0 * z);
    if (a < 1.0) {
        const double d = b - s;
        return ((1.0 - a) * d * d - 4.0 * z * d + 4.0 * z * z) / z;
    }
    const double d = b + s;
    return ((a - 1.0) * d * d + 4.0 * z * d - 4.0 * z * z) / z;
}

Complex limit_minus(Complex v) {
    return guarded_div(1.0 + v, 1.0 - v, "limit_minus: pole at V = 1");
}

Complex limit_plus(Complex v) {
    return guarded_div(-(1.0 - v), 1.0 + v, "limit_plus: pole at V = -1");
}

} // namespace donoghue
