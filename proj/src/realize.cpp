#include "donoghue/realize.hpp"

#include <cmath>
#include <stdexcept>

namespace donoghue {

namespace {

double sign_of(double q) { return q < 0.0 ? -1.0 : 1.0; }

Hypothesis tag_for(double Q, double a) {
    if (Q != 0.0)
        return Hypothesis::Mixed;
    return a > 1.0 ? Hypothesis::Hyp2 : Hypothesis::Hyp1;
}

Complex unimodular_U(double kappa, double Q, double a) {
    // U = ((a + Qi)(1 - kappa^2) - 1 - kappa^2) / (2 kappa)
    const Complex num = Complex(a, Q) * (1.0 - kappa * kappa) - (1.0 + kappa * kappa);
    return num / (2.0 * kappa);
}

} // namespace

RealizationParams params_class_M(double Q) {
    if (!std::isfinite(Q))
        throw std::invalid_argument("params_class_M: Q must be finite");
    if (Q == 0.0)
        return {0.0, -1.0, 1.0, Hypothesis::Hyp1};
    const double root = std::sqrt(Q * Q + 4.0);
    const double kappa = std::abs(Q) / root;
    const Complex U = sign_of(Q) * Complex(-Q, 2.0) / root;
    const Complex phase = Complex(Q, -2.0) / root;
    return {kappa, U, phase, Hypothesis::Mixed};
}

RealizationParams params_class_M_original_basis(double Q) {
    if (!std::isfinite(Q))
        throw std::invalid_argument("params_class_M_original_basis: Q must be finite");
    if (Q == 0.0)
        throw std::invalid_argument("params_class_M_original_basis: requires Q != 0");
    const double d = Q * Q + 4.0;
    const Complex kappa = std::abs(Q) * Complex(Q, -2.0) / d;
    const Complex U = sign_of(Q) * Complex(4.0 - Q * Q, 4.0 * Q) / d;
    return {kappa, U, 1.0, Hypothesis::Mixed};
}

RealizationParams params_class_Mk(double Q, double a) {
    if (!std::isfinite(Q) || !std::isfinite(a))
        throw std::invalid_argument("params_class_Mk: arguments must be finite");
    if (!(a > 0.0) || !(a < 1.0))
        throw std::invalid_argument("params_class_Mk: requires 0 < a < 1");
    const double b = Q * Q + a * a - 1.0;
    const double r = std::sqrt(b * b + 4.0 * Q * Q);
    const double t = b - 2.0 * Q * Q - r;
    const double u = b - r;
    const double kappa = (t * t - a * u * u + 4.0 * Q * Q * a * (a - 1.0)) /
                         (t * t + a * u * u + 4.0 * Q * Q * a * (a + 1.0));
    return {kappa, unimodular_U(kappa, Q, a), 1.0, tag_for(Q, a)};
}

RealizationParams params_class_Mk_inv(double Q, double a) {
    if (!std::isfinite(Q) || !std::isfinite(a))
        throw std::invalid_argument("params_class_Mk_inv: arguments must be finite");
    if (!(a > 1.0))
        throw std::invalid_argument("params_class_Mk_inv: requires a > 1");
    const double b = Q * Q + a * a - 1.0;
    const double r = std::sqrt(b * b + 4.0 * Q * Q);
    const double t = b - 2.0 * Q * Q + r;
    const double u = b + r;
    const double kappa = (a * u * u - t * t - 4.0 * Q * Q * a * (a - 1.0)) /
                         (t * t + a * u * u + 4.0 * Q * Q * a * (a + 1.0));
    return {kappa, unimodular_U(kappa, Q, a), 1.0, tag_for(Q, a)};
}

UniversalParams params_universal(double Q, double a) {
    if (!std::isfinite(Q) || !std::isfinite(a))
        throw std::invalid_argument("params_universal: arguments must be finite");
    if (Q == 0.0)
        throw std::invalid_argument("params_universal: requires Q != 0");
    if (!(a > 0.0))
        throw std::invalid_argument("params_universal: requires a > 0");
    const double s = std::sqrt(Q * Q + 4.0 * a * a);
    UniversalParams p{};
    p.kappa_tilde = std::abs(Q) / s;
    p.U_tilde = sign_of(Q) * Complex(-Q, 2.0 * a) / s;
    p.phase = Complex(Q, -2.0 * a) / s;
    p.kappa_complex =
        Complex(a - 1.0, -Q) * s / Complex((a - 1.0) * Q, -(Q * Q + 2.0 * a * a + 2.0 * a));
    p.kappa_modulus = std::abs(p.kappa_complex);
    p.kappa_original = p.kappa_complex * p.phase;
    return p;
}

double matching_Q0(double kappa) {
    if (!(kappa > 0.0) || !(kappa < 1.0))
        throw std::invalid_argument("matching_Q0: requires kappa in (0,1)");
    return 2.0 * kappa / std::sqrt(1.0 - kappa * kappa);
}

Complex sign_flip_factor(double Q, double a) {
    if (Q == 0.0)
        throw std::invalid_argument("sign_flip_factor: requires Q != 0");
    const double re = 1.0 - a * a - Q * Q;
    return Complex(re, -2.0 * Q) / Complex(re, 2.0 * Q);
}

Complex example3_factor() {
    const Complex w_full = -Complex(5.0, 2.0 * std::sqrt(10.0)) / 5.0;
    const Complex w_base = -Complex(1.0, 8.0) / 5.0;
    return w_full / w_base;
}

std::optional<double> special_Q_root(double a) {
    if (!(a > 1.0))
        throw std::invalid_argument("special_Q_root: requires a > 1");
    const auto f = [a](double q) {
        return params_class_Mk_inv(q, a).kappa.real() - q / std::sqrt(q * q + 4.0);
    };
    double lo = 1.0;
    double hi = 3.0;
    double flo = f(lo);
    double fhi = f(hi);
    for (int i = 0; i < 10 && flo * fhi > 0.0; ++i) {
        hi *= 2.0;
        fhi = f(hi);
    }
    if (flo * fhi > 0.0)
        return std::nullopt;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) < 1e-10)
            return mid;
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

RealizationParams classify_and_realize(const PerturbedHerglotz& f) {
    const Classification c = classify(f);
    switch (c.tag.family) {
    case Family::M:
        return params_class_M(f.Q);
    case Family::M_kappa:
        return params_class_Mk(f.Q, f.a);
    default:
        return params_class_Mk_inv(f.Q, f.a);
    }
}

} // namespace donoghue
