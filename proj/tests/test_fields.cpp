#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "eprb/errors.hpp"
#include "eprb/fields.hpp"
#include "oracles.hpp"

using namespace eprb::fields;
using std::numbers::pi;

namespace {

const double kRootHalf = std::sqrt(0.5);

JonesVector random_vector() {
    auto r = [] { return oracle::uniform(-2.0, 2.0); };
    return {Complex(r(), r()), Complex(r(), r())};
}

}  // namespace

TEST_CASE("source_field_A at the axes") {
    const JonesVector at_zero = source_field_A(0.0);
    CHECK(at_zero.x == Complex(1.0, 0.0));
    CHECK(at_zero.y == Complex(0.0, 0.0));

    const JonesVector at_right = source_field_A(pi / 2);
    CHECK(std::abs(at_right.x) < 1e-15);
    CHECK(at_right.y.real() == doctest::Approx(kRootHalf).epsilon(1e-15));
    CHECK(at_right.y.imag() == doctest::Approx(kRootHalf).epsilon(1e-15));

    for (double theta : {0.1, 1.7, 5.0}) {
        CHECK(std::abs(intensity(source_field_A(theta)) - 1.0) < 1e-14);
    }
}

TEST_CASE("source_field_B examples") {
    const JonesVector aligned = source_field_B(0.7, 0.7);
    CHECK(aligned.x == Complex(0.0, 0.0));
    CHECK(aligned.y == Complex(1.0, 0.0));

    // -sin(-pi/2) e^{i 3pi/4}
    const JonesVector crossed = source_field_B(0.0, pi / 2);
    CHECK(std::abs(crossed.x - Complex(-kRootHalf, kRootHalf)) < 1e-15);
    CHECK(std::abs(crossed.y) < 1e-15);

    for (auto [theta, phi] : {std::pair{0.3, 0.9}, {2.0, 4.0}, {5.5, 1.1}}) {
        CHECK(std::abs(intensity(source_field_B(theta, phi)) - 1.0) < 1e-14);
    }
}

TEST_CASE("source fields agree with the hand expansion") {
    for (int i = 0; i < 200; ++i) {
        const double theta = oracle::uniform(-10.0, 10.0);
        const double phi = oracle::uniform(-10.0, 10.0);
        const auto e = oracle::expand_fields(theta, phi);
        const JonesVector a = source_field_A(theta);
        const JonesVector b = source_field_B(theta, phi);
        CHECK(std::abs(a.x - Complex(e.ax_re, e.ax_im)) < 1e-14);
        CHECK(std::abs(a.y - Complex(e.ay_re, e.ay_im)) < 1e-14);
        CHECK(std::abs(b.x - Complex(e.bx_re, e.bx_im)) < 1e-14);
        CHECK(std::abs(b.y - Complex(e.by_re, e.by_im)) < 1e-14);
    }
}

TEST_CASE("field invariants over random angles") {
    for (int i = 0; i < 500; ++i) {
        const double theta = oracle::uniform(-50.0, 50.0);
        const double phi = oracle::uniform(-50.0, 50.0);
        CHECK(std::abs(intensity(source_field_A(theta)) - 1.0) < 1e-14);
        CHECK(std::abs(intensity(source_field_B(theta, phi)) - 1.0) < 1e-14);

    }
    for (int i = 0; i < 500; ++i) {
        const double theta = oracle::uniform(-2 * pi, 2 * pi);
        const double phi = oracle::uniform(-2 * pi, 2 * pi);
        const double shift = oracle::uniform(-1.0, 1.0);
        const JonesVector b = source_field_B(theta, phi);
        const JonesVector shifted = source_field_B(theta + shift, phi + shift);
        CHECK(std::abs(b.x - shifted.x) < 1e-14);
        CHECK(std::abs(b.y - shifted.y) < 1e-14);
    }
}

TEST_CASE("non-finite angles are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(source_field_A(nan), eprb::DomainError);
    CHECK_THROWS_AS(source_field_B(inf, 0.0), eprb::DomainError);
    CHECK_THROWS_AS(source_field_B(0.0, nan), eprb::DomainError);
}

TEST_CASE("bilinear_dot") {
    const JonesVector x_hat{Complex(1, 0), Complex(0, 0)};
    const JonesVector y_hat{Complex(0, 0), Complex(1, 0)};
    CHECK(bilinear_dot(x_hat, x_hat) == Complex(1, 0));
    CHECK(bilinear_dot(x_hat, y_hat) == Complex(0, 0));
    for (int i = 0; i < 100; ++i) {
        const JonesVector u = random_vector();
        const JonesVector v = random_vector();
        CHECK(std::abs(bilinear_dot(u, v) - bilinear_dot(v, u)) < 1e-14);
    }
}

TEST_CASE("hermitian_dot") {
    const JonesVector i_x{Complex(0, 1), Complex(0, 0)};
    CHECK(hermitian_dot(i_x, i_x) == Complex(1, 0));
    for (int i = 0; i < 100; ++i) {
        const JonesVector u = random_vector();
        const JonesVector v = random_vector();
        const Complex self = hermitian_dot(u, u);
        CHECK(self.imag() == 0.0);
        CHECK(std::abs(self.real() - intensity(u)) < 1e-14);
        CHECK(std::abs(hermitian_dot(u, v) - std::conj(hermitian_dot(v, u))) < 1e-14);
    }
}

TEST_CASE("intensity") {
    CHECK(intensity({Complex(1, 0), Complex(0, 0)}) == 1.0);
    CHECK(intensity({Complex(0, 0), Complex(0, 0)}) == 0.0);
    CHECK(intensity({Complex(3, 4), Complex(0, 0)}) == 25.0);

    for (int i = 0; i < 100; ++i) {
        const JonesVector v = random_vector();
        const Complex phase = std::polar(1.0, oracle::uniform(0.0, 2 * pi));
        CHECK(intensity({phase * v.x, phase * v.y}) == doctest::Approx(intensity(v)).epsilon(1e-14));
    }
}
