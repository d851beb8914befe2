#include "donoghue/model.hpp"

#include <cmath>
#include <stdexcept>

#include "donoghue/moebius.hpp"

namespace donoghue {

namespace {

const Complex kI(0.0, 1.0);

void check_off_spectrum(const DiscreteMeasure& m, Complex z) {
    if (z.imag() == 0.0)
        throw std::domain_error("model: z must be off the real axis");
    for (const Atom& a : m.atoms())
        if (std::abs(z - Complex(a.position, 0.0)) < 1e-10)
            throw std::domain_error("model: z too close to an atom");
}

} // namespace

ModelSystem::ModelSystem(DiscreteMeasure measure, Complex kappa, Complex U)
    : measure_(std::move(measure)), kappa_(kappa), U_(U), C_(real_part_constant(measure_)) {
    if (!(std::abs(kappa_) < 1.0))
        throw std::invalid_argument("ModelSystem: requires |kappa| < 1");
    if (std::abs(std::abs(U_) - 1.0) > 1e-9)
        throw std::invalid_argument("ModelSystem: U must be unimodular");
}

Complex weighted_inner(const DiscreteMeasure& m, const VectorC& u, const VectorC& v) {
    const auto& atoms = m.atoms();
    if (u.size() != static_cast<Eigen::Index>(atoms.size()) || u.size() != v.size())
        throw std::invalid_argument("weighted_inner: size mismatch");
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i)
        s += atoms[static_cast<std::size_t>(i)].weight * u[i] * std::conj(v[i]);
    return s;
}

VectorC deficiency_vector(const ModelSystem& ms, Complex z) {
    if (z.imag() == 0.0)
        throw std::domain_error("deficiency_vector: z must be off the real axis");
    const auto& atoms = ms.measure().atoms();
    VectorC g(static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t i = 0; i < atoms.size(); ++i)
        g[static_cast<Eigen::Index>(i)] = 1.0 / (atoms[i].position - z);
    return g;
}

Complex weyl_integral(const ModelSystem& ms, Complex z) {
    check_off_spectrum(ms.measure(), z);
    Complex s = 0.0;
    for (const Atom& a : ms.measure().atoms())
        s += a.weight * (1.0 / (a.position - z) - a.position / (1.0 + a.position * a.position));
    return s;
}

Complex weyl_function(const ModelSystem& ms, Complex z) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("weyl_function: requires Im z > 0");
    check_off_spectrum(ms.measure(), z);
    const double a = normalization(ms.measure());
    Complex form = 0.0;
    for (const Atom& atom : ms.measure().atoms()) {
        const double lam = atom.position;
        form += atom.weight * (lam * z + 1.0) / ((lam - z) * (1.0 + lam * lam));
    }
    return form / a;
}

Complex livsic_function(const ModelSystem& ms, Complex z) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("livsic_function: requires Im z > 0");
    check_off_spectrum(ms.measure(), z);
    const VectorC g_z = deficiency_vector(ms, z);
    const VectorC g_plus = deficiency_vector(ms, kI);
    const VectorC g_minus = deficiency_vector(ms, -kI);
    const Complex den = weighted_inner(ms.measure(), g_z, g_plus);
    if (std::abs(den) < 1e-14)
        throw std::domain_error("livsic_function: <g_z, g_+> vanishes");
    return (z - kI) / (z + kI) * weighted_inner(ms.measure(), g_z, g_minus) / den;
}

Complex characteristic_function(const ModelSystem& ms, Complex z) {
    const Complex s = livsic_function(ms, z);
    const Complex den = std::conj(ms.kappa()) * s - 1.0;
    if (std::abs(den) < 1e-14)
        throw std::domain_error("characteristic_function: denominator vanishes");
    return (s - ms.kappa()) / den;
}

std::pair<Complex, Complex> transfer_and_impedance(const ModelSystem& ms, Complex z,
                                                   ImpedanceHypothesis) {
    const Complex S = characteristic_function(ms, z);
    if (std::abs(S) < 1e-14)
        throw std::domain_error("transfer_and_impedance: S(z) = 0");
    const Complex W = 1.0 / S;
    return {W, transfer_to_impedance(W)};
}

MatrixC dissipative_resolvent(const ModelSystem& ms, Complex k_param, Complex z) {
    if (!(std::abs(k_param) < 1.0))
        throw std::invalid_argument("dissipative_resolvent: requires |k| < 1");
    check_off_spectrum(ms.measure(), z);
    const Complex shift = kI * (k_param + 1.0) / (k_param - 1.0);
    const Complex den = weyl_integral(ms, z) + shift;
    if (std::abs(den) < 1e-10)
        throw std::domain_error("dissipative_resolvent: z is a spectral point of T");
    const Complex p = 1.0 / den;
    const auto& atoms = ms.measure().atoms();
    const Eigen::Index n = static_cast<Eigen::Index>(atoms.size());
    const VectorC g = deficiency_vector(ms, z);
    MatrixC R = MatrixC::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        R(i, i) = g[i];
        for (Eigen::Index j = 0; j < n; ++j)
            R(i, j) -= p * g[i] * atoms[static_cast<std::size_t>(j)].weight * g[j];
    }
    return R;
}

MatrixC recover_main_operator(const ModelSystem& ms, Complex k_param) {
    const Complex d = -ms.C() + kI * (k_param + 1.0) / (k_param - 1.0);
    if (std::abs(d) < 1e-14)
        throw std::domain_error("recover_main_operator: degenerate rank-one coupling");
    const auto& atoms = ms.measure().atoms();
    const Eigen::Index n = static_cast<Eigen::Index>(atoms.size());
    MatrixC T = MatrixC::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        T(i, i) = atoms[static_cast<std::size_t>(i)].position;
        for (Eigen::Index j = 0; j < n; ++j)
            T(i, j) += atoms[static_cast<std::size_t>(j)].weight / d;
    }
    return T;
}

MatrixC weighted_adjoint(const DiscreteMeasure& m, const MatrixC& T) {
    const auto& atoms = m.atoms();
    const Eigen::Index n = T.rows();
    MatrixC A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            A(i, j) = std::conj(T(j, i)) * atoms[static_cast<std::size_t>(j)].weight /
                      atoms[static_cast<std::size_t>(i)].weight;
    return A;
}

double min_imaginary_eigenvalue(const DiscreteMeasure& m, const MatrixC& T) {
    const MatrixC B = (T - weighted_adjoint(m, T)) / Complex(0.0, 2.0);
    const auto& atoms = m.atoms();
    const Eigen::Index n = B.rows();
    MatrixC S(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            S(i, j) = B(i, j) * std::sqrt(atoms[static_cast<std::size_t>(i)].weight /
                                          atoms[static_cast<std::size_t>(j)].weight);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(S);
    return es.eigenvalues().minCoeff();
}

LivsicVanishing livsic_vanishing_test(const ModelSystem& ms, const std::vector<Complex>& grid,
                                      double tol) {
    if (grid.empty())
        throw std::invalid_argument("livsic_vanishing_test: empty grid");
    if (ms.size() == 1)
        return {true, true};
    double worst = 0.0;
    for (Complex z : grid) {
        if (!(z.imag() > 0.0))
            throw std::invalid_argument("livsic_vanishing_test: grid must be in C+");
        worst = std::max(worst, std::abs(livsic_function(ms, z)));
    }
    return {worst < tol, false};
}

} // namespace donoghue
