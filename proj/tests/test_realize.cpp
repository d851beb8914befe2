#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "donoghue/realize.hpp"

using namespace donoghue;

namespace {
const double S5 = std::sqrt(5.0);
const double S65 = std::sqrt(65.0);
}

TEST_CASE("class M parameters") {
    const auto p = params_class_M(1.0);
    CHECK(std::abs(p.kappa - 1.0 / S5) < 1e-14);
    CHECK(std::abs(p.U - Complex(-1.0, 2.0) / S5) < 1e-14);
    CHECK(std::abs(p.basis_phase - Complex(1.0, -2.0) / S5) < 1e-14);
    CHECK(p.hypothesis == Hypothesis::Mixed);

    const auto n = params_class_M(-1.0);
    CHECK(std::abs(n.kappa - p.kappa) < 1e-14);
    CHECK(std::abs(n.U - std::conj(p.U)) < 1e-14);

    const auto zero = params_class_M(0.0);
    CHECK(zero.kappa == Complex(0.0));
    CHECK(zero.U == Complex(-1.0));
    CHECK(zero.hypothesis == Hypothesis::Hyp1);
}

TEST_CASE("class M in the original basis") {
    const auto p = params_class_M_original_basis(1.0);
    CHECK(std::abs(p.kappa - Complex(1.0, -2.0) / 5.0) < 1e-14);
    CHECK(std::abs(p.U - Complex(3.0, 4.0) / 5.0) < 1e-14);
    CHECK(std::abs(std::abs(params_class_M_original_basis(2.0).kappa) - 1.0 / std::sqrt(2.0)) <
          1e-14);
    CHECK(std::abs(std::abs(p.kappa) - params_class_M(1.0).kappa.real()) < 1e-14);
    CHECK_THROWS_AS(params_class_M_original_basis(0.0), std::invalid_argument);
}

TEST_CASE("class Mk parameters") {
    const auto p = params_class_Mk(1.0, 0.5);
    CHECK(std::abs(p.kappa - S65 / 13.0) < 1e-14);
    CHECK(std::abs(p.U - Complex(-7.0, 4.0) / S65) < 1e-14);

    const auto zero = params_class_Mk(0.0, 0.5);
    CHECK(zero.kappa.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(zero.U + 1.0) < 1e-14);
    CHECK(zero.hypothesis == Hypothesis::Hyp1);

    const auto n = params_class_Mk(-1.0, 0.5);
    CHECK(std::abs(n.kappa - p.kappa) < 1e-14);
    CHECK(std::abs(n.U - std::conj(p.U)) < 1e-14);

    CHECK_THROWS_AS(params_class_Mk(1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(params_class_Mk(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("class Mk_inv parameters") {
    const auto zero = params_class_Mk_inv(0.0, 2.0);
    CHECK(zero.kappa.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(zero.U - 1.0) < 1e-14);
    CHECK(zero.hypothesis == Hypothesis::Hyp2);

    const auto p = params_class_Mk_inv(1.0, 4.0);
    CHECK(p.kappa.real() > 0.0);
    CHECK(p.kappa.real() < 1.0);
    CHECK(std::abs(std::abs(p.U) - 1.0) < 1e-13);

    const auto a = params_class_Mk_inv(3.0, 2.0);
    const auto b = params_class_Mk_inv(-3.0, 2.0);
    CHECK(std::abs(a.kappa - b.kappa) < 1e-14);
    CHECK(std::abs(b.U - std::conj(a.U)) < 1e-13);

    CHECK_THROWS_AS(params_class_Mk_inv(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("universal parameters") {
    const auto u = params_universal(1.0, 0.5);
    CHECK(u.kappa_tilde == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(u.U_tilde - Complex(-1.0, 1.0) / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(u.phase - Complex(1.0, -1.0) / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(u.kappa_complex - std::sqrt(2.0) * Complex(11.0, -3.0) / 26.0) < 1e-14);
    CHECK(u.kappa_modulus == doctest::Approx(S65 / 13.0).epsilon(1e-14));

    // at a = 1 the original-basis value reduces to the class-M one
    const auto one = params_universal(1.0, 1.0);
    CHECK(std::abs(one.kappa_original - Complex(1.0, -2.0) / 5.0) < 1e-14);

    CHECK_THROWS_AS(params_universal(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("matching Q0") {
    CHECK(matching_Q0(S65 / 13.0) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-14));
    CHECK(matching_Q0(1.0 / S5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(params_class_M(matching_Q0(0.37)).kappa.real() ==
          doctest::Approx(0.37).epsilon(1e-13));
    CHECK_THROWS_AS(matching_Q0(0.0), std::invalid_argument);
    CHECK_THROWS_AS(matching_Q0(1.0), std::invalid_argument);
}

TEST_CASE("sign flip factor") {
    const auto f = sign_flip_factor(1.0, 1.0);
    CHECK(std::abs(f - Complex(-3.0, 4.0) / 5.0) < 1e-14);
    CHECK(std::abs(std::abs(sign_flip_factor(2.3, 0.7)) - 1.0) < 1e-14);
    CHECK(std::abs(sign_flip_factor(1e-9, 2.0) - 1.0) < 1e-8);
    CHECK_THROWS_AS(sign_flip_factor(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("worked unimodular factor") {
    const auto f = example3_factor();
    CHECK(std::abs(f - Complex(5.0, 2.0 * std::sqrt(10.0)) / Complex(1.0, 8.0)) < 1e-14);
    CHECK(std::abs(std::abs(f) - 1.0) < 1e-14);
}

TEST_CASE("matching root for a = 4") {
    const auto root = special_Q_root(4.0);
    REQUIRE(root.has_value());
    CHECK(*root > 1.0);
    CHECK(*root < 3.0);
    const auto f = [](double q) {
        return params_class_Mk_inv(q, 4.0).kappa.real() - q / std::sqrt(q * q + 4.0);
    };
    CHECK(std::abs(f(*root)) < 1e-10);
    CHECK(f(1.0) > 0.0);
    CHECK(f(3.0) < 0.0);
    CHECK(std::abs(params_class_Mk_inv(*root, 4.0).kappa.real() -
                   params_class_M(*root).kappa.real()) < 1e-9);
}

TEST_CASE("dispatch on the normalization") {
    const auto m = classify_and_realize(PerturbedHerglotz(1.0, make_measure({{0.0, 1.0}})));
    CHECK(std::abs(m.kappa - 1.0 / S5) < 1e-14);

    const auto mk = classify_and_realize(PerturbedHerglotz(1.0, make_measure({{0.0, 0.5}})));
    CHECK(std::abs(mk.kappa - S65 / 13.0) < 1e-14);

    const auto un = classify_and_realize(PerturbedHerglotz(0.0, make_measure({{0.0, 1.0}})));
    CHECK(un.kappa == Complex(0.0));
    CHECK(un.U == Complex(-1.0));
}
