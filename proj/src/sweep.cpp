#include "donoghue/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "donoghue/realize.hpp"

namespace donoghue {

namespace {

RealizationParams params_for(double a, double Q) {
    if (std::abs(a - 1.0) <= 1e-12 * std::max(a, 1.0))
        return params_class_M(Q);
    if (a < 1.0)
        return params_class_Mk(Q, a);
    return params_class_Mk_inv(Q, a);
}

void check_grid(double a, double q_min, double q_max, int steps) {
    if (!(a > 0.0))
        throw std::invalid_argument("kappa_curve: requires a > 0");
    if (!(q_min < q_max))
        throw std::invalid_argument("kappa_curve: requires q_min < q_max");
    if (steps < 2)
        throw std::invalid_argument("kappa_curve: requires at least 2 steps");
}

CurvePoint point_at(double a, double q_min, double step, int i) {
    const double Q = q_min + step * i;
    const RealizationParams p = params_for(a, Q);
    return {Q, p.kappa.real(), p.U};
}

} // namespace

std::vector<CurvePoint> kappa_curve_serial(double a, double q_min, double q_max, int steps) {
    check_grid(a, q_min, q_max, steps);
    const double step = (q_max - q_min) / (steps - 1);
    std::vector<CurvePoint> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        out[static_cast<std::size_t>(i)] = point_at(a, q_min, step, i);
    return out;
}

std::vector<CurvePoint> kappa_curve_parallel(double a, double q_min, double q_max, int steps) {
    check_grid(a, q_min, q_max, steps);
    const double step = (q_max - q_min) / (steps - 1);
    std::vector<CurvePoint> out(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < steps; ++i)
        out[static_cast<std::size_t>(i)] = point_at(a, q_min, step, i);
    return out;
}

} // namespace donoghue
