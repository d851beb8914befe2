#pragma once

#include <complex>
#include <vector>

#include "donoghue/measure.hpp"

namespace donoghue {

using Complex = std::complex<double>;

/// V(z) = Q + sum w_i (1/(lambda_i - z) - lambda_i/(1 + lambda_i^2)),
/// with the normalization a = sum w_i/(1+lambda_i^2) cached.
struct PerturbedHerglotz {
    double Q;
    DiscreteMeasure measure;
    double a; // normalization(measure)

    PerturbedHerglotz(double q, DiscreteMeasure m);
};

enum class Family { M, M_kappa, M_kappa_inv };

struct ClassTag {
    Family family;
    double kappa0;   // in [0,1); zero exactly for Family::M
    bool perturbed;  // Q != 0
};

struct Classification {
    ClassTag tag;
    double Q;
    double a;
};

/// Evaluates V(z) off the real axis.
Complex evaluate(const PerturbedHerglotz& f, Complex z);

/// Returns f with Q shifted by dQ; the measure is shared unchanged.
PerturbedHerglotz perturb(const PerturbedHerglotz& f, double dQ);

/// Detects the class from the normalization a:
///   a = 1 -> M;  a < 1 -> M_kappa, kappa0 = (1-a)/(1+a);
///   a > 1 -> M_kappa_inv, kappa0 = (a-1)/(1+a).
/// Equality with 1 is decided to relative tolerance 1e-12.
Classification classify(const PerturbedHerglotz& f);

/// Returns eta * Im V(i eta) for each eta. For a finite measure the values
/// approach the total mass; growth without bound is the signature of the
/// infinite measures the realization formulas assume.
std::vector<double> mass_growth_diagnostic(const PerturbedHerglotz& f,
                                           const std::vector<double>& etas);

} // namespace donoghue
