#include "donoghue/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "donoghue/model.hpp"
#include "donoghue/moebius.hpp"
#include "donoghue/realize.hpp"
#include "donoghue/sweep.hpp"
#include "donoghue/starext.hpp"

namespace donoghue {

namespace {

const Complex kI(0.0, 1.0);
const double kPi = 3.14159265358979323846;

class Checker {
public:
    Checker(std::string name, double tol) {
        result_.name = std::move(name);
        result_.tolerance = tol;
    }

    void deviation(double dev, const char* what) {
        result_.max_deviation = std::max(result_.max_deviation, dev);
        if (dev > result_.tolerance)
            fail(what);
    }

    void require(bool ok, const char* what) {
        if (!ok)
            fail(what);
    }

    void count_case() { ++result_.cases; }

    SuiteResult take() && { return std::move(result_); }

private:
    void fail(const char* what) {
        if (result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    SuiteResult result_;
};

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
}

double nonzero_uniform(std::mt19937_64& rng, double lo, double hi, double floor) {
    std::uniform_real_distribution<double> d(lo, hi);
    double q = d(rng);
    while (std::abs(q) < floor)
        q = d(rng);
    return q;
}

DiscreteMeasure random_measure(std::mt19937_64& rng, int max_atoms, int min_atoms = 1) {
    std::uniform_int_distribution<int> nd(min_atoms, max_atoms);
    std::uniform_real_distribution<double> pos(-5.0, 5.0);
    std::uniform_real_distribution<double> wgt(0.1, 2.0);
    const int n = nd(rng);
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(pos(rng), wgt(rng));
    return make_measure(pairs);
}

double frobenius(const MatrixC& m) { return m.norm(); }

} // namespace

SuiteResult symmetry_suite(std::uint64_t seed, int points, double tol) {
    Checker c("symmetry", tol);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < points; ++k) {
        c.count_case();
        const double Q = nonzero_uniform(rng, -100.0, 100.0, 1e-6);
        const double a_lo = log_uniform(rng, 1e-3, 0.999);
        const double a_hi = log_uniform(rng, 1.001, 1e3);

        const auto pm = params_class_M(Q);
        const auto pm_neg = params_class_M(-Q);
        c.deviation(std::abs(pm.kappa - pm_neg.kappa), "class-M kappa evenness");
        c.deviation(std::abs(pm_neg.U - std::conj(pm.U)), "class-M U conjugation");
        c.deviation(std::abs(std::abs(pm.U) - 1.0), "class-M |U| = 1");
        c.require(pm.kappa.real() >= 0.0 && pm.kappa.real() < 1.0, "class-M kappa range");

        const auto pk = params_class_Mk(Q, a_lo);
        const auto pk_neg = params_class_Mk(-Q, a_lo);
        c.deviation(std::abs(pk.kappa - pk_neg.kappa), "class-Mk kappa evenness");
        c.deviation(std::abs(pk_neg.U - std::conj(pk.U)), "class-Mk U conjugation");
        c.deviation(std::abs(std::abs(pk.U) - 1.0), "class-Mk |U| = 1");
        c.require(pk.kappa.real() >= 0.0 && pk.kappa.real() < 1.0, "class-Mk kappa range");

        const auto pi = params_class_Mk_inv(Q, a_hi);
        const auto pi_neg = params_class_Mk_inv(-Q, a_hi);
        c.deviation(std::abs(pi.kappa - pi_neg.kappa), "class-Mk-inv kappa evenness");
        c.deviation(std::abs(pi_neg.U - std::conj(pi.U)), "class-Mk-inv U conjugation");
        c.deviation(std::abs(std::abs(pi.U) - 1.0), "class-Mk-inv |U| = 1");
        c.require(pi.kappa.real() >= 0.0 && pi.kappa.real() < 1.0, "class-Mk-inv kappa range");

        c.deviation(std::abs(params_universal(Q, a_lo).kappa_modulus - pk.kappa.real()),
                    "universal modulus vs class-Mk kappa");
        c.deviation(std::abs(params_universal(Q, a_hi).kappa_modulus - pi.kappa.real()),
                    "universal modulus vs class-Mk-inv kappa");
        c.deviation(std::abs(params_universal(Q, 1.0).kappa_modulus - pm.kappa.real()),
                    "universal modulus vs class-M kappa");
    }
    return std::move(c).take();
}

SuiteResult branch_suite(std::uint64_t seed, int points, double tol, int extremum_samples,
                         double extremum_tol) {
    Checker c("branch-inequalities", tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> alo(0.01, 0.99);
    std::uniform_real_distribution<double> ahi(1.01, 10.0);
    for (int k = 0; k < points; ++k) {
        c.count_case();
        const double Q = nonzero_uniform(rng, -10.0, 10.0, 1e-6);
        const double a1 = alo(rng);
        const double a2 = ahi(rng);
        c.require(branch_value(a1, Q, -1) < 1.0, "(-) branch < 1 for a < 1");
        c.require(branch_value(a2, Q, +1) > 1.0, "(+) branch > 1 for a > 1");
        c.deviation(std::abs(branch_value(a1, Q, -1) * branch_value(a1, Q, +1) - 1.0),
                    "branch product = 1 (a < 1)");
        c.deviation(std::abs(branch_value(a2, Q, -1) * branch_value(a2, Q, +1) - 1.0),
                    "branch product = 1 (a > 1)");
    }
    std::uniform_real_distribution<double> alo2(0.05, 0.95);
    std::uniform_real_distribution<double> ahi2(1.05, 9.0);
    for (int k = 0; k < extremum_samples; ++k) {
        c.count_case();
        const double a = (k % 2 == 0) ? alo2(rng) : ahi2(rng);
        const auto [z0, f0] = branch_extremum_claim(a);
        // coarse grid, then ternary refinement around the best cell
        double best_z = 0.05;
        double best_f = branch_objective(a, best_z);
        for (int i = 2; i <= 2000; ++i) {
            const double z = 0.05 * i;
            const double f = branch_objective(a, z);
            if (f < best_f) {
                best_f = f;
                best_z = z;
            }
        }
        double lo = std::max(1e-6, best_z - 0.05);
        double hi = best_z + 0.05;
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (branch_objective(a, m1) < branch_objective(a, m2))
                hi = m2;
            else
                lo = m1;
        }
        const double z_num = 0.5 * (lo + hi);
        const double min_f = branch_objective(a, z_num);
        // the inequality underlying the branch bounds: the objective stays
        // above 4a|1-a| everywhere, in particular at its numerical minimum
        const double bound = 4.0 * a * std::abs(1.0 - a);
        c.require(min_f > bound + extremum_tol, "objective minimum exceeds 4a|1-a|");
        c.require(f0 > bound, "claimed stationary value exceeds 4a|1-a|");
        c.require(branch_objective(a, z0) > bound, "objective at z0 exceeds 4a|1-a|");
    }
    return std::move(c).take();
}

SuiteResult rotation_suite(std::uint64_t seed, int cases, double tol) {
    Checker c("rotation", tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ad(0.1, 10.0);
    std::uniform_real_distribution<double> xd(-3.0, 3.0);
    std::uniform_real_distribution<double> yd(0.1, 3.0);
    for (int k = 0; k < cases; ++k) {
        c.count_case();
        const double Q = nonzero_uniform(rng, -10.0, 10.0, 1e-3);
        const double a = ad(rng);
        const auto [r_plus, r_minus] = solve_rotation_angles(Q, a);

        const auto [q1, a1] = rotated_parameters(Q, a, r_plus);
        const auto [q2, a2] = rotated_parameters(Q, a, r_minus);
        c.deviation(std::abs(q1), "Q_alpha = 0 at (+) angle");
        c.deviation(std::abs(q2), "Q_alpha = 0 at (-) angle");
        c.deviation(std::abs(a1 * a2 - 1.0), "a_alpha branch product = 1");
        const double b_plus = branch_value(a, Q, +1);
        const double b_minus = branch_value(a, Q, -1);
        c.deviation(std::abs(a1 - b_plus) / std::max(1.0, b_plus),
                    "a_alpha matches (+) closed form");
        c.deviation(std::abs(a2 - b_minus) / std::max(1.0, b_minus),
                    "a_alpha matches (-) closed form");

        // tan 2a = 2Q / (1 - Q^2 - a^2) at both angles
        const double rhs = 2.0 * Q / (1.0 - Q * Q - a * a);
        for (const auto& r : {r_plus, r_minus}) {
            const double t2 = std::tan(2.0 * r.alpha);
            if (std::abs(rhs) < 1e6)
                c.deviation(std::abs(t2 - rhs) / std::max(1.0, std::abs(rhs)),
                            "tan 2alpha identity");
        }

        for (int j = 0; j < 20; ++j) {
            const Complex v(xd(rng), yd(rng));
            try {
                const Complex prod = rotate(v, r_plus) * rotate(v, r_minus);
                c.deviation(std::abs(prod + 1.0), "rotated impedances negative reciprocal");
            } catch (const std::domain_error&) {
            }
        }
    }
    for (int k = 0; k < 200; ++k) {
        c.count_case();
        const double Q = nonzero_uniform(rng, -10.0, 10.0, 1e-3);
        const auto [r_plus, r_minus] = solve_rotation_angles(Q, 1.0);
        for (const auto& r : {r_plus, r_minus}) {
            const double a_alpha = rotated_parameters(Q, 1.0, r).second;
            const double t = std::tan(r.alpha);
            c.deviation(std::abs(t * t - a_alpha) / std::max(1.0, a_alpha),
                        "tan^2 alpha = a_alpha at a = 1");
        }
    }
    return std::move(c).take();
}

SuiteResult cayley_suite(std::uint64_t seed, int cases, double tol) {
    Checker c("cayley", tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, 1000.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> alpha_d(0.0, kPi);
    for (int k = 0; k < cases; ++k) {
        c.count_case();
        const Complex v = std::polar(mag(rng), ang(rng));
        try {
            const Complex rt = transfer_to_impedance(impedance_to_transfer(v));
            c.deviation(std::abs(rt - v) / std::max(1.0, std::abs(v)), "cayley roundtrip");
        } catch (const std::domain_error&) {
        }
        const double alpha = alpha_d(rng);
        const double beta = alpha_d(rng);
        double gamma = std::fmod(alpha + beta - kPi / 2.0, kPi);
        if (gamma < 0.0)
            gamma += kPi;
        try {
            const Complex two_step =
                rotate(rotate(v, RotationAngle::from_alpha(alpha)), RotationAngle::from_alpha(beta));
            const Complex one_step = rotate(v, RotationAngle::from_alpha(gamma));
            c.deviation(std::abs(two_step - one_step) / std::max(1.0, std::abs(one_step)),
                        "rotation composition law");
        } catch (const std::domain_error&) {
        }
        try {
            c.deviation(std::abs(rotate(v, RotationAngle::from_alpha(kPi / 2.0)) - v) /
                            std::max(1.0, std::abs(v)),
                        "alpha = pi/2 is the identity");
            c.deviation(std::abs(limit_plus(v) + 1.0 / limit_minus(v)) /
                            std::max(1.0, std::abs(limit_plus(v))),
                        "limit_plus = -1/limit_minus");
        } catch (const std::domain_error&) {
        }
    }
    return std::move(c).take();
}

SuiteResult star_extension_suite(std::uint64_t seed, int cases, double tol) {
    Checker c("star-extension", tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> kd(0.0, 0.95);
    std::uniform_real_distribution<double> td(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> xd(-3.0, 3.0);
    std::uniform_real_distribution<double> yd(0.1, 3.0);
    const Complex i = kI;
    for (int k = 0; k < cases; ++k) {
        c.count_case();
        const double kappa = kd(rng);
        const Complex U = std::polar(1.0, td(rng));

        const Matrix2 delta = involution_delta(kappa);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                Complex e = delta[r][0] * delta[0][s] + delta[r][1] * delta[1][s];
                c.deviation(std::abs(e - (r == s ? 1.0 : 0.0)), "Delta^2 = I");
            }

        const StarExtensionData d = bi_extension_matrices(kappa, U);
        const Complex outer[2][2] = {
            {d.c_phi * std::conj(d.c_phi), d.c_phi * std::conj(d.c_psi)},
            {d.c_psi * std::conj(d.c_phi), d.c_psi * std::conj(d.c_psi)}};
        Matrix2 imag{}, real{};
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                imag[r][s] = (d.S_A[r][s] - d.S_Astar[r][s]) / (2.0 * i);
                real[r][s] = (d.S_A[r][s] + d.S_Astar[r][s]) / 2.0;
                c.deviation(std::abs(imag[r][s] - outer[r][s]),
                            "imaginary part is the channel outer product");
            }
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                const Complex rhs = i * (imag[r][0] * delta[0][s] + imag[r][1] * delta[1][s]);
                c.deviation(std::abs(real[r][s] - rhs), "real part = i Im(A) Delta");
            }

        // determinant of the impedance system and residual of its solution
        const double norm =
            std::sqrt(1.0 - kappa * kappa) / (std::sqrt(2.0) * std::abs(1.0 + kappa * U));
        const Complex m11 = std::conj(d.c_phi);
        const Complex m12 = std::conj(d.c_psi);
        const Complex m21 = -i * norm;
        const Complex m22 = i * norm * std::conj(U);
        c.deviation(std::abs(m11 * m22 - m12 * m21 - i * std::conj(U)),
                    "system determinant = i conj(U)");
        const Complex V(xd(rng), yd(rng));
        const auto [az, bz] = solve_impedance_system(kappa, U, V, HalfPlaneTag::plus);
        c.deviation(std::abs(m11 * az + m12 * bz - V), "system residual, first row");
        c.deviation(std::abs(m21 * az + m22 * bz - 1.0), "system residual, second row");
    }
    for (int k = 0; k <= 9; ++k) {
        c.count_case();
        const double kappa = 0.1 * k;
        c.deviation(std::abs(parameter_H(kappa, -1.0) + i / (1.0 + kappa)),
                    "H reduction at U = -1");
        c.deviation(std::abs(parameter_H(kappa, 1.0) - i / (1.0 - kappa)),
                    "H reduction at U = 1");
        const auto [cm_phi, cm_psi] = channel_coefficients(kappa, -1.0);
        const double ref_minus = std::sqrt((1.0 - kappa) / (1.0 + kappa)) / std::sqrt(2.0);
        c.deviation(std::abs(cm_phi - ref_minus), "channel reduction at U = -1");
        c.deviation(std::abs(cm_psi + cm_phi), "channel antisymmetry at U = -1");
        const auto [cp_phi, cp_psi] = channel_coefficients(kappa, 1.0);
        const double ref_plus = std::sqrt((1.0 + kappa) / (1.0 - kappa)) / std::sqrt(2.0);
        c.deviation(std::abs(cp_phi - ref_plus), "channel reduction at U = 1");
        c.deviation(std::abs(cp_psi - cp_phi), "channel symmetry at U = 1");
        const StarExtensionData d = bi_extension_matrices(kappa, -1.0);
        const Complex f = i / (1.0 + kappa);
        const Complex ref[2][2] = {{-f * kappa, -f}, {f * kappa, f}};
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                c.deviation(std::abs(d.S_A[r][s] - ref[r][s]), "S_A reduction at U = -1");
    }
    c.deviation(std::abs(parameter_H(0.0, -i) + 1.0), "H(0, -i) = -1");
    // solution pair for the a = 1 perturbed function V = Q + V0
    for (int k = 0; k < 200; ++k) {
        c.count_case();
        const double Q = nonzero_uniform(rng, -5.0, 5.0, 1e-3);
        const Complex V0(xd(rng), yd(rng));
        const auto p = params_class_M(Q);
        const auto [az, bz] =
            solve_impedance_system(p.kappa.real(), p.U, Q + V0, HalfPlaneTag::plus);
        c.deviation(std::abs(az - (V0 + i) / std::sqrt(2.0)), "a(z) = (V0 + i)/sqrt(2)");
        c.deviation(std::abs(bz - (V0 - i) * p.U / std::sqrt(2.0)),
                    "b(z) = (V0 - i) U / sqrt(2)");
    }
    return std::move(c).take();
}

SuiteResult model_chain_suite(std::uint64_t seed, int models, double tol) {
    Checker c("model-chain", tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> kd(0.0, 0.9);
    std::uniform_real_distribution<double> xd(-3.0, 3.0);
    std::uniform_real_distribution<double> yd(0.3, 3.0);
    for (int k = 0; k < models; ++k) {
        c.count_case();
        const double kappa = kd(rng);
        const double a_target = (1.0 - kappa) / (1.0 + kappa);
        const DiscreteMeasure m = rescale_to(random_measure(rng, 20, 2), a_target);
        const ModelSystem ms(m, kappa, -1.0);
        for (int j = 0; j < 20; ++j) {
            const Complex z(xd(rng), yd(rng));
            try {
                const Complex v_chain =
                    transfer_and_impedance(ms, z, ImpedanceHypothesis::Hyp1).second;
                const Complex v_direct =
                    (1.0 - kappa) / (1.0 + kappa) * weyl_function(ms, z);
                c.deviation(std::abs(v_chain - v_direct) / std::max(1.0, std::abs(v_direct)),
                            "chain impedance vs scaled Weyl function");
            } catch (const std::domain_error&) {
            }
        }
    }
    return std::move(c).take();
}

SuiteResult resolvent_suite(std::uint64_t seed, int models, double entry_tol,
                            double frobenius_tol) {
    Checker c("resolvent", frobenius_tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> kd(0.0, 0.9);
    std::uniform_real_distribution<double> td(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> ad(0.1, 10.0);
    const std::vector<Complex> zs = {Complex(0, 2), Complex(1, 1), Complex(0, -3),
                                     Complex(0.5, 0.5), Complex(-1, -2)};
    for (int k = 0; k < models; ++k) {
        c.count_case();
        const DiscreteMeasure m = random_measure(rng, 20);
        Complex k_param;
        if (k % 2 == 0) {
            k_param = std::polar(kd(rng), td(rng));
        } else {
            const double Q = nonzero_uniform(rng, -10.0, 10.0, 1e-3);
            k_param = params_universal(Q, ad(rng)).kappa_complex;
        }
        const ModelSystem ms(m, 0.0, -1.0);
        const MatrixC T = recover_main_operator(ms, k_param);
        const Eigen::Index n = T.rows();
        const MatrixC I = MatrixC::Identity(n, n);

        std::vector<MatrixC> Rs;
        for (Complex z : zs) {
            try {
                const MatrixC R = dissipative_resolvent(ms, k_param, z);
                const MatrixC oracle = (T - z * I).partialPivLu().inverse();
                c.require((R - oracle).cwiseAbs().maxCoeff() <= entry_tol,
                          "resolvent formula vs matrix inverse");
                c.deviation(frobenius(z * I + R.partialPivLu().inverse() - T),
                            "z-independence of zI + R(z)^{-1}");
                Rs.push_back(R);
            } catch (const std::domain_error&) {
            }
        }
        for (std::size_t u = 0; u + 1 < Rs.size(); ++u) {
            const Complex dz = zs[u] - zs[u + 1];
            c.deviation(frobenius(Rs[u] - Rs[u + 1] - dz * Rs[u] * Rs[u + 1]),
                        "first resolvent identity");
        }
        const double min_eig = min_imaginary_eigenvalue(m, T);
        c.require(min_eig >= -1e-10, "dissipativity of the recovered operator");
    }
    return std::move(c).take();
}

SuiteResult curve_suite() {
    Checker c("curve-shape", 1e-12);
    for (const double a : {1.0, 0.5, 4.0}) {
        c.count_case();
        const auto serial = kappa_curve_serial(a, -100.0, 100.0, 201);
        const auto parallel = kappa_curve_parallel(a, -100.0, 100.0, 201);
        c.require(serial.size() == parallel.size(), "kernel output sizes agree");
        for (std::size_t i = 0; i < serial.size(); ++i) {
            c.require(serial[i].Q == parallel[i].Q && serial[i].kappa == parallel[i].kappa &&
                          serial[i].U == parallel[i].U,
                      "serial and parallel kernels agree bitwise");
        }
        const std::size_t n = serial.size();
        for (std::size_t i = 0; i < n; ++i)
            c.deviation(std::abs(serial[i].kappa - serial[n - 1 - i].kappa),
                        "kappa even in Q");
        for (std::size_t i = n / 2; i + 1 < n; ++i)
            c.require(serial[i + 1].kappa > serial[i].kappa,
                      "kappa strictly increasing for Q > 0");
        c.deviation(std::abs(serial[n / 2].kappa - std::abs(1.0 - a) / (1.0 + a)),
                    "vertex value |1-a|/(1+a)");
        c.require(serial.back().kappa > 0.99, "kappa(100) > 0.99");
    }
    return std::move(c).take();
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    return {
        symmetry_suite(seed),
        branch_suite(seed + 1),
        rotation_suite(seed + 2),
        cayley_suite(seed + 3),
        star_extension_suite(seed + 4),
        model_chain_suite(seed + 5),
        resolvent_suite(seed + 6),
        curve_suite(),
    };
}

} // namespace donoghue
