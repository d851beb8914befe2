#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "donoghue/measure.hpp"

namespace donoghue {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

/// Finite-dimensional model over L^2(d mu) for a discrete measure: the
/// multiplication operator by lambda plus the extension parameters (kappa, U).
class ModelSystem {
public:
    ModelSystem(DiscreteMeasure measure, Complex kappa, Complex U);

    const DiscreteMeasure& measure() const { return measure_; }
    Complex kappa() const { return kappa_; }
    Complex U() const { return U_; }
    double C() const { return C_; } // sum w_i lambda_i / (1 + lambda_i^2)
    std::size_t size() const { return measure_.size(); }

private:
    DiscreteMeasure measure_;
    Complex kappa_;
    Complex U_;
    double C_;
};

/// mu-weighted inner product sum w_i u_i conj(v_i).
Complex weighted_inner(const DiscreteMeasure& m, const VectorC& u, const VectorC& v);

/// Deficiency vector g_z with components 1/(lambda_i - z), z off the real axis.
VectorC deficiency_vector(const ModelSystem& ms, Complex z);

/// Weyl function as the sesquilinear form ((Az+I)(A-zI)^{-1} g+, g+) with g+
/// normalized to unit mu-norm; equals the representation integral divided by
/// the normalization a.
Complex weyl_function(const ModelSystem& ms, Complex z);

/// The raw representation integral sum w_i (1/(lambda_i - z) - lambda_i/(1+lambda_i^2)).
Complex weyl_integral(const ModelSystem& ms, Complex z);

/// Livsic function s(z) = ((z-i)/(z+i)) <g_z, g_-> / <g_z, g_+>.
Complex livsic_function(const ModelSystem& ms, Complex z);

/// Characteristic function S(z) = (s(z) - kappa) / (conj(kappa) s(z) - 1).
Complex characteristic_function(const ModelSystem& ms, Complex z);

enum class ImpedanceHypothesis { Hyp1, Hyp2 };

/// Transfer value W = 1/S(z) and the impedance V recovered from it; V also
/// equals ((1-kappa)/(1+kappa)) M(z) under Hyp1 and the reciprocal scaling
/// under Hyp2 when the model normalization matches.
std::pair<Complex, Complex> transfer_and_impedance(const ModelSystem& ms, Complex z,
                                                   ImpedanceHypothesis hyp);

/// Resolvent of the dissipative main operator:
///   (T - z)^{-1} = diag(1/(lambda_i - z)) - p(z) g_z (w .* g_z)^T,
///   p(z) = 1 / (M_int(z) + i (k+1)/(k-1)),
/// where M_int is the raw representation integral.
MatrixC dissipative_resolvent(const ModelSystem& ms, Complex k_param, Complex z);

/// The main operator itself: T = diag(lambda) + (1/d) 1 (w)^T with
/// d = -C + i (k+1)/(k-1). Its resolvent reproduces dissipative_resolvent.
MatrixC recover_main_operator(const ModelSystem& ms, Complex k_param);

/// Weighted adjoint of T in L^2(d mu): (T*)_{ij} = conj(T_{ji}) w_j / w_i.
MatrixC weighted_adjoint(const DiscreteMeasure& m, const MatrixC& T);

/// Smallest eigenvalue of the mu-weighted Hermitian part (T - T*)/(2i),
/// computed after the similarity D^{1/2} (.) D^{-1/2}.
double min_imaginary_eigenvalue(const DiscreteMeasure& m, const MatrixC& T);

struct LivsicVanishing {
    bool vanishing;
    bool degenerate; // single-atom model: s is identically degenerate
};

/// True when max |s(z)| over the grid stays below tol.
LivsicVanishing livsic_vanishing_test(const ModelSystem& ms, const std::vector<Complex>& grid,
                                      double tol);

} // namespace donoghue
