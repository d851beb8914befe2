#pragma once

#include <complex>
#include <optional>

#include "donoghue/herglotz.hpp"

namespace donoghue {

enum class Hypothesis { Hyp1, Hyp2, Mixed };

/// Von Neumann parameters of the dissipative extension realizing a given
/// impedance. basis_phase is the unimodular deficiency-basis multiplier
/// -e^{2i alpha}; the value 1 means the original basis.
struct RealizationParams {
    Complex kappa;
    Complex U;
    Complex basis_phase;
    Hypothesis hypothesis;
};

/// Parameters of the one universal formula valid for every a > 0.
struct UniversalParams {
    double kappa_tilde;     // |Q| / sqrt(Q^2 + 4a^2)
    Complex U_tilde;        // sign(Q) (-Q + 2ai) / sqrt(Q^2 + 4a^2)
    Complex phase;          // (Q - 2ai) / sqrt(Q^2 + 4a^2)
    Complex kappa_complex;  // (a-1-Qi) sqrt(Q^2+4a^2) / ((a-1)Q - (Q^2+2a^2+2a)i)
    double kappa_modulus;   // |kappa_complex|
    Complex kappa_original; // kappa_complex * phase, the original-basis value
};

/// Parameters for a = 1:
///   kappa = |Q|/sqrt(Q^2+4), U = sign(Q)(-Q+2i)/sqrt(Q^2+4),
///   basis_phase = (Q-2i)/sqrt(Q^2+4).
/// Q = 0 returns the unperturbed limit kappa = 0, U = -1.
RealizationParams params_class_M(double Q);

/// Same extension expressed in the unrotated deficiency basis:
///   kappa = |Q|(Q-2i)/(Q^2+4), U = sign(Q)(4-Q^2+4Qi)/(Q^2+4).
RealizationParams params_class_M_original_basis(double Q);

/// Parameters for 0 < a < 1, with b = Q^2+a^2-1 and r = sqrt(b^2+4Q^2):
///   kappa = [(b-2Q^2-r)^2 - a(b-r)^2 + 4Q^2 a(a-1)]
///         / [(b-2Q^2-r)^2 + a(b-r)^2 + 4Q^2 a(a+1)],
///   U = ((a+Qi)(1-kappa^2) - 1 - kappa^2) / (2 kappa).
/// Q = 0 gives kappa = (1-a)/(1+a), U = -1.
RealizationParams params_class_Mk(double Q, double a);

/// Parameters for a > 1:
///   kappa = [a(b+r)^2 - (b-2Q^2+r)^2 - 4Q^2 a(a-1)]
///         / [(b-2Q^2+r)^2 + a(b+r)^2 + 4Q^2 a(a+1)],
/// same U expression. Q = 0 gives kappa = (a-1)/(1+a), U = 1.
RealizationParams params_class_Mk_inv(double Q, double a);

/// The universal parameter set of the single-formula treatment.
UniversalParams params_universal(double Q, double a);

/// Q0 = 2 kappa / sqrt(1 - kappa^2): the a = 1 perturbation with the given
/// von Neumann parameter.
double matching_Q0(double kappa);

/// Unimodular factor (1 - a^2 - Q^2 - 2Qi) / (1 - a^2 - Q^2 + 2Qi).
Complex sign_flip_factor(double Q, double a);

/// The unimodular quotient (5 + 2 sqrt(10) i) / (1 + 8i) of the two transfer
/// values -(5 + 2 sqrt(10) i)/5 and -(1 + 8i)/5.
Complex example3_factor();

/// Root of f(Q) = kappa_{Mk_inv}(Q, a) - Q/sqrt(Q^2+4), bisected on an
/// expanding bracket starting at [1,3]; absent when no sign change is found.
std::optional<double> special_Q_root(double a);

/// Dispatch on the normalization: a = 1 -> params_class_M, a < 1 ->
/// params_class_Mk, a > 1 -> params_class_Mk_inv.
RealizationParams classify_and_realize(const PerturbedHerglotz& f);

} // namespace donoghue
