#include <doctest.h>

#include <array>
#include <cmath>

#include "osgt/quadrature.hpp"
#include "osgt/special.hpp"

using namespace osgt;

TEST_CASE("polynomials are integrated to machine precision") {
    const std::array<double, 2> pts{0.0, 1.0};
    auto res = quadrature::integrate([](double x) { return x * x; }, pts, 1e-14, 0.0);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("gaussian mass matches the Q function") {
    const std::array<double, 3> pts{-8.0, 0.0, 8.0};
    auto res = quadrature::integrate([](double x) { return special::normal_pdf(x); },
                                     pts, 1e-13, 0.0);
    CHECK(res.converged);
    const double want = 1.0 - 2.0 * special::q_function(8.0);
    CHECK(res.value == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("kinked integrand converges once the kink is a split point") {
    // integral of exp(-|x|) over [-6, 6] = 2 (1 - e^-6)
    const double want = 2.0 * (1.0 - std::exp(-6.0));
    const std::array<double, 3> with_kink{-6.0, 0.0, 6.0};
    auto good = quadrature::integrate([](double x) { return std::exp(-std::abs(x)); },
                                      with_kink, 1e-13, 0.0);
    CHECK(good.converged);
    CHECK(good.value == doctest::Approx(want).epsilon(1e-13));
    // without the split it still gets there, just with more work
    const std::array<double, 2> no_kink{-6.0, 6.0};
    auto slow = quadrature::integrate([](double x) { return std::exp(-std::abs(x)); },
                                      no_kink, 1e-13, 0.0);
    CHECK(slow.converged);
    CHECK(slow.evaluations > good.evaluations);
}

TEST_CASE("interval budget exhaustion is reported") {
    // A needle the adaptive scheme cannot resolve inside a tiny budget.
    const std::array<double, 2> pts{-1.0, 1.0};
    auto res = quadrature::integrate(
        [](double x) { return std::exp(-1e12 * x * x); }, pts, 1e-15, 0.0, 8);
    CHECK_FALSE(res.converged);
}
