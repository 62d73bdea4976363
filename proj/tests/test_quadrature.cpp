#include "chainrad/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using chainrad::gauss_legendre;

TEST_CASE("Gauss-Legendre rules integrate polynomials of degree 2n-1 exactly") {
    for (int n : {1, 2, 3, 5, 8, 64, 255}) {
        const auto rule = gauss_legendre(n);
        CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
        for (int degree = 0; degree <= 2 * n - 1 && degree <= 40; ++degree) {
            double q = 0.0;
            for (int i = 0; i < n; ++i) q += rule.weights[i] * std::pow(rule.nodes[i], degree);
            const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            CHECK(std::abs(q - exact) < 1e-13);
        }
    }
}

TEST_CASE("three-point rule matches the tabulated nodes") {
    const auto rule = gauss_legendre(3);
    CHECK(rule.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
    CHECK(rule.nodes[1] == 0.0);
    CHECK(rule.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    CHECK(rule.weights[2] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("oscillatory integrand converges") {
    // int_{-1}^{1} cos(40 x) dx = sin(40) / 20
    const auto rule = gauss_legendre(128);
    double q = 0.0;
    for (int i = 0; i < 128; ++i) q += rule.weights[i] * std::cos(40.0 * rule.nodes[i]);
    CHECK(std::abs(q - std::sin(40.0) / 20.0) < 1e-14);
}
