#pragma once

#include <complex>
#include <vector>

namespace donoghue {

using Complex = std::complex<double>;

struct CurvePoint {
    double Q;
    double kappa;
    Complex U;
};

/// Samples the von Neumann parameter curve Q -> (kappa(Q), U(Q)) for the
/// class selected by a, on a uniform grid of `steps` points over
/// [q_min, q_max]. Serial reference implementation.
std::vector<CurvePoint> kappa_curve_serial(double a, double q_min, double q_max, int steps);

/// Same curve computed with an OpenMP parallel loop; must agree with the
/// serial kernel bit-for-bit (each point is an independent evaluation).
std::vector<CurvePoint> kappa_curve_parallel(double a, double q_min, double q_max, int steps);

} // namespace donoghue
