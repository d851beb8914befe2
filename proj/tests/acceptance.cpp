#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "donoghue/moebius.hpp"
#include "donoghue/realize.hpp"
#include "donoghue/starext.hpp"
#include "donoghue/verify.hpp"

namespace {

using donoghue::Complex;
using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok)
        ++failures;
}

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool near(Complex got, Complex want, double tol = 1e-12) { return std::abs(got - want) < tol; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void suite_criterion(int criterion, const donoghue::SuiteResult& r, double budget_ms,
                     double elapsed_ms, const std::string& what) {
    const bool ok = r.passed && (budget_ms <= 0.0 || elapsed_ms < budget_ms);
    std::string msg = what + " (max deviation " + fmt(r.max_deviation);
    if (budget_ms > 0.0)
        msg += ", " + fmt(elapsed_ms) + " ms";
    msg += ")";
    if (!r.passed)
        msg += " [" + r.detail + "]";
    report(criterion, ok, msg);
}

} // namespace

int main() {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0),
                 s13 = std::sqrt(13.0), s26 = std::sqrt(26.0), s65 = std::sqrt(65.0);

    // 1: worked example at Q = 1, a = 1, under 1 ms
    {
        (void)donoghue::params_class_M(1.0); // warm up before timing
        const auto t0 = clock_type::now();
        const auto p = donoghue::params_class_M(1.0);
        const auto [c_phi, c_psi] = donoghue::channel_coefficients(p.kappa.real(), p.U);
        const auto [d_phi, d_psi] = donoghue::to_delta_basis(c_phi, c_psi, p.basis_phase);
        const double elapsed = ms_since(t0);
        const bool ok = near(p.kappa, 1.0 / s5) && near(p.U, Complex(-1.0, 2.0) / s5) &&
                        near(p.basis_phase, Complex(1.0, -2.0) / s5) &&
                        near(d_phi, Complex(1.0, 1.0) / s2) &&
                        near(d_psi, Complex(7.0, 1.0) / (5.0 * s2)) && elapsed < 1.0;
        report(1, ok,
               "Q=1, a=1 golden values (kappa, U, basis phase, channel coefficients), " +
                   fmt(elapsed) + " ms");
    }

    // 2: worked example at Q = 1, a = 1/2
    {
        const auto p = donoghue::params_class_Mk(1.0, 0.5);
        const auto u = donoghue::params_universal(1.0, 0.5);
        const auto [c_phi, c_psi] = donoghue::channel_coefficients(p.kappa.real(), p.U);
        const bool ok = near(u.kappa_tilde, 1.0 / s2) &&
                        near(u.U_tilde, Complex(-1.0, 1.0) / s2) &&
                        near(u.kappa_complex, s2 * Complex(11.0, -3.0) / 26.0) &&
                        near(u.kappa_modulus, s65 / 13.0) && near(p.kappa, s65 / 13.0) &&
                        near(p.U, Complex(-7.0, 4.0) / s65) &&
                        near(c_phi, Complex(1.0, 2.0) / 2.0) &&
                        near(c_psi, Complex(1.0, 18.0) / (2.0 * s65)) &&
                        near(donoghue::impedance_to_transfer(Complex(1.0, 0.5)),
                             -Complex(1.0, 8.0) / 5.0);
        report(2, ok, "Q=1, a=1/2 golden values (universal and class parameters, channel, W)");
    }

    // 3: worked example matching kappa = sqrt(65)/13
    {
        const double q0 = donoghue::matching_Q0(s65 / 13.0);
        const auto p = donoghue::params_class_M(q0);
        const auto [c_phi, c_psi] = donoghue::channel_coefficients(s65 / 13.0, p.U);
        const Complex factor = donoghue::example3_factor();
        const bool ok = near(q0, std::sqrt(2.5)) &&
                        near(p.U, Complex(-s5, 2.0 * s2) / s13) &&
                        near(c_phi, Complex(s26, s65) / (2.0 * s13)) &&
                        near(c_psi, Complex(s10, 9.0) / (2.0 * s13)) &&
                        near(factor, Complex(5.0, 2.0 * s10) / Complex(1.0, 8.0)) &&
                        std::abs(std::abs(factor) - 1.0) < 1e-12;
        report(3, ok, "matching Q0 golden values (Q0, U, channel, unimodular factor)");
    }

    // 4: symmetry suite, 10^4 points, under 1 s
    {
        const auto t0 = clock_type::now();
        const auto r = donoghue::symmetry_suite(0, 10000, 1e-11);
        suite_criterion(4, r, 1000.0, ms_since(t0),
                        "kappa evenness, U conjugation, ranges on 10^4 random points");
    }

    // 5: branch inequality suite
    {
        const auto r = donoghue::branch_suite(0, 10000, 1e-10, 100, 1e-6);
        suite_criterion(5, r, 0.0, 0.0,
                        "branch inequalities, product = 1, objective minimum above 4a|1-a|");
    }

    // 6: rotation suite, 10^3 cases, under 1 s
    {
        const auto t0 = clock_type::now();
        const auto r = donoghue::rotation_suite(0, 1000, 1e-10);
        suite_criterion(6, r, 1000.0, ms_since(t0),
                        "solved angles: Q_alpha = 0, tan^2 = a_alpha, negative reciprocals");
    }

    // 7: model chain oracle
    {
        const auto r = donoghue::model_chain_suite(0, 100, 1e-8);
        suite_criterion(7, r, 0.0, 0.0,
                        "scaled Weyl function vs s->S->W->V chain on 100 random models");
    }

    // 8: resolvent oracle, under 10 s
    {
        const auto t0 = clock_type::now();
        const auto r = donoghue::resolvent_suite(0, 100, 1e-10, 1e-8);
        suite_criterion(8, r, 10000.0, ms_since(t0),
                        "rank-one resolvent vs recovered operator, identities, dissipativity");
    }

    // 9: bi-extension suite
    {
        const auto r = donoghue::star_extension_suite(0, 1000, 1e-11);
        suite_criterion(9, r, 0.0, 0.0,
                        "Delta^2 = I, matrix identities, system determinant, reductions");
    }

    // 10: curve shape for a in {1, 1/2, 4}
    {
        const auto r = donoghue::curve_suite();
        suite_criterion(10, r, 0.0, 0.0,
                        "curves even, increasing for Q > 0, vertex |1-a|/(1+a), kappa(100) > 0.99");
    }

    // 11: matching root for a = 4
    {
        const auto root = donoghue::special_Q_root(4.0);
        const auto f = [](double q) {
            return donoghue::params_class_Mk_inv(q, 4.0).kappa.real() -
                   q / std::sqrt(q * q + 4.0);
        };
        const bool ok = root.has_value() && *root > 1.0 && *root < 3.0 &&
                        std::abs(f(*root)) < 1e-10 && f(1.0) > 0.0 && f(3.0) < 0.0;
        report(11, ok,
               "special Q root for a = 4 in (1,3) with sign pattern f(1) > 0 > f(3)");
    }

    std::printf("%s\n", failures == 0 ? "all acceptance criteria passed"
                                      : "acceptance criteria FAILED");
    return failures == 0 ? 0 : 1;
}
