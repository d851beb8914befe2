#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "donoghue/model.hpp"
#include "donoghue/realize.hpp"

using namespace donoghue;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("deficiency vectors and weighted inner products") {
    const ModelSystem ms(make_measure({{0.0, 1.0}}), 0.0, -1.0);
    const auto g = deficiency_vector(ms, I);
    REQUIRE(g.size() == 1);
    CHECK(std::abs(g[0] - I) < 1e-14);
    CHECK_THROWS_AS(deficiency_vector(ms, Complex(1.0, 0.0)), std::domain_error);

    const ModelSystem two(make_measure({{-1.0, 1.0}, {1.0, 1.0}}), 0.0, -1.0);
    const auto gp = deficiency_vector(two, I);
    const auto gm = deficiency_vector(two, -I);
    CHECK(std::abs(weighted_inner(two.measure(), gp, gp).real() -
                   normalization(two.measure())) < 1e-14);
    for (Eigen::Index i = 0; i < gp.size(); ++i)
        CHECK(std::abs(gm[i] - std::conj(gp[i])) < 1e-14);
}

TEST_CASE("Weyl function of simple measures") {
    const ModelSystem single(make_measure({{0.0, 1.0}}), 0.0, -1.0);
    const Complex z(0.4, 1.2);
    CHECK(std::abs(weyl_function(single, z) + 1.0 / z) < 1e-14);
    CHECK(std::abs(weyl_function(single, I) - I) < 1e-14);

    const ModelSystem sym(make_measure({{-1.0, 1.0}, {1.0, 1.0}}), 0.0, -1.0);
    CHECK(std::abs(weyl_function(sym, I) - I) < 1e-14);

    // form path equals the raw integral divided by the normalization
    const ModelSystem skew(make_measure({{-2.0, 0.7}, {0.5, 1.3}, {3.0, 0.4}}), 0.0, -1.0);
    const double a = normalization(skew.measure());
    for (const Complex zz : {Complex(0.3, 0.9), Complex(-1.2, 2.0), Complex(2.5, 0.4)})
        CHECK(std::abs(weyl_function(skew, zz) - weyl_integral(skew, zz) / a) < 1e-13);
    CHECK_THROWS_AS(weyl_function(single, -I), std::domain_error);
}

TEST_CASE("Livsic function") {
    const ModelSystem ms(make_measure({{-1.0, 1.0}, {1.0, 1.0}}), 0.0, -1.0);
    CHECK(std::abs(livsic_function(ms, I)) < 1e-14);
    for (const Complex z : {Complex(0.0, 2.0), Complex(1.5, 0.7), Complex(-0.4, 1.1)}) {
        const Complex s = livsic_function(ms, z);
        CHECK(std::abs(s) < 1.0);
        const Complex m = (s + 1.0) / (s - 1.0) / I;
        CHECK(std::abs(m - weyl_function(ms, z)) < 1e-11);
    }
}

TEST_CASE("characteristic function") {
    const ModelSystem zero(make_measure({{-1.0, 0.8}, {2.0, 1.5}}), 0.0, -1.0);
    const Complex z(0.3, 1.4);
    CHECK(std::abs(characteristic_function(zero, z) + livsic_function(zero, z)) < 1e-14);

    const ModelSystem third(make_measure({{-1.0, 0.8}, {2.0, 1.5}}), 1.0 / 3.0, -1.0);
    const Complex s = livsic_function(third, z);
    CHECK(std::abs(characteristic_function(third, z) - (s - 1.0 / 3.0) / (s / 3.0 - 1.0)) <
          1e-14);
    // s = 0 would give S = kappa; check via the near-zero point z = i
    CHECK(std::abs(characteristic_function(third, I) - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("impedance chain matches the scaled Weyl function") {
    const double kappa = 0.25;
    const double a = (1.0 - kappa) / (1.0 + kappa);
    const auto m = rescale_to(make_measure({{-2.0, 1.0}, {0.0, 0.5}, {1.5, 2.0}}), a);
    const ModelSystem ms(m, kappa, -1.0);
    for (const Complex z : {Complex(0.5, 1.0), Complex(-1.0, 2.5), Complex(2.0, 0.6)}) {
        const auto [w, v] = transfer_and_impedance(ms, z, ImpedanceHypothesis::Hyp1);
        const Complex direct = (1.0 - kappa) / (1.0 + kappa) * weyl_function(ms, z);
        CHECK(std::abs(v - direct) < 1e-11);
        CHECK(std::abs(w - 1.0 / characteristic_function(ms, z)) < 1e-12);
    }
}

TEST_CASE("resolvent formula against the recovered operator") {
    const auto m = make_measure({{-1.5, 0.9}, {0.2, 1.1}, {2.7, 0.3}});
    const ModelSystem ms(m, 0.0, -1.0);
    const Complex k_param = Complex(1.0, -2.0) / 5.0;
    const MatrixC T = recover_main_operator(ms, k_param);
    const Eigen::Index n = T.rows();
    const MatrixC Id = MatrixC::Identity(n, n);
    const std::vector<Complex> zs = {Complex(0, 2), Complex(1, 1), Complex(0, -3),
                                     Complex(0.5, 0.5), Complex(-1, -2)};
    std::vector<MatrixC> Rs;
    for (const Complex z : zs) {
        const MatrixC R = dissipative_resolvent(ms, k_param, z);
        const MatrixC oracle = (T - z * Id).partialPivLu().inverse();
        CHECK((R - oracle).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((z * Id + R.partialPivLu().inverse() - T).norm() < 1e-10);
        Rs.push_back(R);
    }
    for (std::size_t i = 0; i + 1 < Rs.size(); ++i) {
        const Complex dz = zs[i] - zs[i + 1];
        CHECK((Rs[i] - Rs[i + 1] - dz * Rs[i] * Rs[i + 1]).norm() < 1e-10);
    }
}

TEST_CASE("k = 0 resolvent shift") {
    // (k+1)/(k-1) = -1 at k = 0, so p(z) = 1/(M_int(z) - i)
    const auto m = make_measure({{0.0, 1.0}});
    const ModelSystem ms(m, 0.0, -1.0);
    const Complex z(0.0, 2.0);
    const MatrixC R = dissipative_resolvent(ms, 0.0, z);
    const Complex g = 1.0 / (0.0 - z);
    const Complex p = 1.0 / (weyl_integral(ms, z) - I);
    CHECK(std::abs(R(0, 0) - (g - p * g * 1.0 * g)) < 1e-14);
}

TEST_CASE("dissipativity of the recovered operator") {
    const auto m = make_measure({{-2.0, 0.5}, {1.0, 1.5}, {4.0, 0.8}});
    const ModelSystem ms(m, 0.0, -1.0);
    for (const double k : {0.1, 0.5, 0.9}) {
        const MatrixC T = recover_main_operator(ms, k);
        CHECK(min_imaginary_eigenvalue(m, T) >= -1e-12);
    }
    const Complex ku = params_universal(1.3, 0.6).kappa_complex;
    CHECK(min_imaginary_eigenvalue(m, recover_main_operator(ms, ku)) >= -1e-12);
}

TEST_CASE("vanishing test") {
    const ModelSystem two(make_measure({{-1.0, 1.0}, {1.0, 1.0}}), 0.0, -1.0);
    std::vector<Complex> grid;
    for (int k = 1; k <= 10; ++k)
        grid.emplace_back(0.3 * k - 1.5, 0.5 + 0.2 * k);
    const auto r = livsic_vanishing_test(two, grid, 1e-8);
    CHECK_FALSE(r.vanishing);
    CHECK_FALSE(r.degenerate);
    CHECK(livsic_vanishing_test(two, grid, 1e300).vanishing);

    const ModelSystem one(make_measure({{0.0, 1.0}}), 0.0, -1.0);
    const auto d = livsic_vanishing_test(one, grid, 1e-8);
    CHECK(d.vanishing);
    CHECK(d.degenerate);
    CHECK_THROWS_AS(livsic_vanishing_test(two, {}, 1e-8), std::invalid_argument);
}

TEST_CASE("guards") {
    const ModelSystem ms(make_measure({{0.0, 1.0}}), 0.0, -1.0);
    CHECK_THROWS_AS(dissipative_resolvent(ms, Complex(2.0, 0.0), Complex(0, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(dissipative_resolvent(ms, 0.0, Complex(1e-12, 0.0)), std::domain_error);
    CHECK_THROWS_AS(ModelSystem(make_measure({{0.0, 1.0}}), Complex(1.5, 0.0), -1.0),
                    std::invalid_argument);
}
