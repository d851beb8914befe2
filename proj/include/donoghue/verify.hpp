#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace donoghue {

struct SuiteResult {
    std::string name;
    int cases = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::string detail; // first violated check, empty when passed
};

/// kappa(-Q) = kappa(Q), U(-Q) = conj U(Q), |U| = 1, kappa in [0,1) for all
/// three class formulas, and |universal kappa| matches the class dispatch.
SuiteResult symmetry_suite(std::uint64_t seed, int points = 10000, double tol = 1e-11);

/// Branch inequalities ((-) < 1 for a < 1, (+) > 1 for a > 1), branch product
/// equal to 1, and the closed-form extremum against numerical minimization.
SuiteResult branch_suite(std::uint64_t seed, int points = 10000, double tol = 1e-10,
                         int extremum_samples = 100, double extremum_tol = 1e-6);

/// Solved angles zero out Q_alpha, tan^2 alpha = a_alpha at a = 1, branch
/// product a_1 a_2 = 1, and the two rotated impedances are negative
/// reciprocals at sample points.
SuiteResult rotation_suite(std::uint64_t seed, int cases = 1000, double tol = 1e-10);

/// Cayley roundtrip identity and the rotation composition law.
SuiteResult cayley_suite(std::uint64_t seed, int cases = 1000, double tol = 1e-12);

/// Delta^2 = I, the real-part/imaginary-part matrix identity, channel outer
/// product reconstruction, linear-system determinant i conj(U), and the
/// U = +-1 reductions.
SuiteResult star_extension_suite(std::uint64_t seed, int cases = 1000, double tol = 1e-11);

/// Scaled Weyl function equals the s -> S -> W -> V chain for models with
/// a = (1 - kappa)/(1 + kappa).
SuiteResult model_chain_suite(std::uint64_t seed, int models = 100, double tol = 1e-8);

/// Rank-one resolvent formula against the inverse of the recovered operator,
/// z-independence of zI + R(z)^{-1}, the first resolvent identity, and
/// dissipativity of the recovered operator.
SuiteResult resolvent_suite(std::uint64_t seed, int models = 100, double entry_tol = 1e-10,
                            double frobenius_tol = 1e-8);

/// Curve shape for a in {1, 1/2, 4}: even in Q, strictly increasing for
/// Q > 0, vertex |1-a|/(1+a), kappa(100) > 0.99, and serial == parallel.
SuiteResult curve_suite();

/// All suites in a fixed order.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

} // namespace donoghue
