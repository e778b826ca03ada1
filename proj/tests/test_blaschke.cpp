#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "unwinding/blaschke.hpp"
#include "unwinding/errors.hpp"
#include "unwinding/quadrature.hpp"
#include "unwinding/roots.hpp"
#include "unwinding/sweep.hpp"

using namespace unwinding;
using test_support::parseval_energy;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("invert_root") {
    CHECK(invert_root(Complex{0.5, 0.0}, 1.0) == Complex{2.0, 0.0});
    CHECK(std::abs(invert_root(kI / 2.0, 1.0) - 2.0 * kI) < 1e-15);
    // r^2 / conj(alpha) by hand: 4/(1-i) = 2+2i
    CHECK(std::abs(invert_root(Complex{1.0, 1.0}, 2.0) - Complex{2.0, 2.0}) < 1e-15);

    CHECK_THROWS_AS(invert_root(Complex{}, 1.0), ZeroRoot);
    CHECK_THROWS_AS(invert_root(Complex{1.5, 0.0}, 1.0), RootOnOrOutsideBoundary);
}

TEST_CASE("factorize: single captured root") {
    RootForm rf;
    rf.roots = {Complex{0.5, 0.0}};
    const Factorization f = factorize(rf, 1.0);
    CHECK(f.b.captured == std::vector<Complex>{Complex{0.5, 0.0}});
    REQUIRE(f.g.degree() == 1);
    CHECK(std::abs(f.g.coeff(0) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(f.g.coeff(1) - Complex{-0.5, 0.0}) < 1e-15);
    CHECK(f.residual < 1e-14);
}

TEST_CASE("factorize: no capture leaves G = F") {
    RootForm rf;
    rf.roots = {Complex{2.0, 0.0}};
    const Factorization f = factorize(rf, 1.0);
    CHECK(f.b.captured.empty());
    CHECK(std::abs(f.b(Complex{0.3, 0.2}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(f.g.coeff(0) - Complex{-2.0, 0.0}) < 1e-15);
    CHECK(std::abs(f.g.coeff(1) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("factorize: zero root contributes the constant r to G") {
    RootForm rf;
    rf.roots = {Complex{}};
    const Factorization f = factorize(rf, 2.0);
    CHECK(f.g.degree() == 0);
    CHECK(std::abs(f.g.coeff(0) - Complex{2.0, 0.0}) < 1e-15);
    // B = z/2
    CHECK(std::abs(f.b(kI) - kI / 2.0) < 1e-15);
    CHECK(f.residual < 1e-15);
}

TEST_CASE("factorize rejects boundary roots and bad radii") {
    RootForm rf;
    rf.roots = {Complex{1.0, 0.0}};
    CHECK_THROWS_AS(factorize(rf, 1.0), RootOnBoundary);
    CHECK_THROWS_AS(factorize(rf, 1.0 + 1e-12), RootOnBoundary);
    CHECK_THROWS_AS(factorize(rf, 0.0), NonPositiveRadius);
    CHECK_THROWS_AS(factorize(rf, -1.0), NonPositiveRadius);
}

TEST_CASE("eval_b basics") {
    RBlaschkeProduct b;
    b.radius = 1.0;
    b.captured = {Complex{}};
    CHECK(std::abs(b(kI) - kI) < 1e-15);  // B = z

    b.captured = {Complex{0.5, 0.0}};
    CHECK(std::abs(b(Complex{}) - Complex{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("eval_b at a pole") {
    RBlaschkeProduct b;
    b.radius = 1.0;
    b.captured = {Complex{0.5, 0.0}};
    CHECK_THROWS_AS(b(Complex{2.0, 0.0}), PoleEvaluation);
}

TEST_CASE("eval_b keeps unit modulus on the boundary") {
    RBlaschkeProduct b;
    b.radius = 1.5;
    b.captured = {Complex{0.3, 0.4}, Complex{-0.2, 0.0}, Complex{0.0, -1.1}};
    CHECK(std::abs(std::abs(b(Complex{1.5, 0.0})) - 1.0) < 1e-12);
    for (int j = 0; j < 64; ++j) {
        const Complex z = std::polar(1.5, kTwoPi * j / 64.0);
        CHECK(std::abs(std::abs(b(z)) - 1.0) < 1e-12);
    }
}

TEST_CASE("reconstruction residual on seeded root forms") {
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t seed = sample_seed(0xb1a5ULL, static_cast<std::uint64_t>(i));
        const int degree = 1 + static_cast<int>(seed % 30);
        const RootForm rf = gen_random_poly(degree, 25.0, seed);
        for (double r : {1.0, 2.0, 3.0, 5.0}) {
            CHECK(factorize(rf, r).residual < 1e-9);
        }
    }
}

TEST_CASE("outer factor has no roots inside the circle") {
    const RootForm rf = gen_random_poly(12, 10.0, 0x0507ULL);
    const Factorization f = factorize(rf, 2.0);
    if (f.g.degree() > 0) {
        for (const Complex& a : find_roots(f.g).roots) {
            CHECK(std::abs(a) >= 2.0 * (1.0 - 1e-8));
        }
    }
}

TEST_CASE("log_derivative_modulus: zero roots give |d/dz z^k| scaling") {
    RBlaschkeProduct b;
    b.radius = 1.0;
    b.captured = {Complex{}};
    CHECK(log_derivative_modulus(b, 0.37) == doctest::Approx(1.0));
    b.captured = {Complex{}, Complex{}};
    CHECK(log_derivative_modulus(b, 2.1) == doctest::Approx(2.0));
}

TEST_CASE("log_derivative_modulus matches a finite difference along the circle") {
    RBlaschkeProduct b;
    b.radius = 1.5;
    b.captured = {Complex{0.3, 0.4}, Complex{-0.2, 0.0}};
    const double t = 0.7;
    const double h = 1e-5;
    const Complex zp = std::polar(1.5, t + h);
    const Complex zm = std::polar(1.5, t - h);
    const double fd = std::abs((b(zp) - b(zm)) / (zp - zm));
    CHECK(log_derivative_modulus(b, t) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("one_step_energies: analytic equality cases") {
    const Polynomial one({Complex{1.0, 0.0}});

    SUBCASE("F = 1, alpha = 0") {
        const OneStepEnergies e = one_step_energies(one, Complex{}, 1.0, 64);
        CHECK(e.f_prime_energy == doctest::Approx(kTwoPi).epsilon(1e-12));
        CHECK(e.g_prime_energy == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(e.f_energy == doctest::Approx(kTwoPi).epsilon(1e-12));
        const double slack = e.f_prime_energy - e.f_energy - e.g_prime_energy;
        CHECK(std::abs(slack) < 1e-9);
    }

    SUBCASE("F = 1, alpha = 0.5") {
        const OneStepEnergies e = one_step_energies(one, Complex{0.5, 0.0}, 1.0, 64);
        CHECK(e.f_prime_energy == doctest::Approx(kTwoPi).epsilon(1e-12));
        CHECK(e.g_prime_energy == doctest::Approx(kTwoPi / 4.0).epsilon(1e-12));
        CHECK(e.f_energy == doctest::Approx(kTwoPi).epsilon(1e-12));
        const double slack =
            e.f_prime_energy - 0.75 * e.f_energy - e.g_prime_energy;
        CHECK(std::abs(slack) < 1e-9);
    }
}

TEST_CASE("one_step_energies agrees with the Parseval oracle") {
    const RootForm src = gen_random_poly(6, 2.0, 0x0e5eULL);
    const Polynomial F{std::vector<Complex>(src.roots.begin(), src.roots.end())};
    const Complex alpha{0.4, -0.3};
    const double r = 2.0;
    const OneStepEnergies e = one_step_energies(F, alpha, r, 8 * (F.degree() + 2));

    const Polynomial f = F * Polynomial({-alpha, Complex{1.0, 0.0}});
    const Polynomial g = F * Polynomial({Complex{r, 0.0}, -std::conj(alpha) / r});
    CHECK(e.f_prime_energy ==
          doctest::Approx(parseval_energy(f.derivative(), r)).epsilon(1e-12));
    CHECK(e.g_prime_energy ==
          doctest::Approx(parseval_energy(g.derivative(), r)).epsilon(1e-12));
    CHECK(e.f_energy == doctest::Approx(parseval_energy(F, r)).epsilon(1e-12));
}

TEST_CASE("one_step_energies inequality on seeded cases") {
    for (int i = 0; i < 25; ++i) {
        const std::uint64_t seed = sample_seed(0x0135ULL, static_cast<std::uint64_t>(i));
        const RootForm src = gen_random_poly(7, 2.0, seed);
        const Polynomial F{
            std::vector<Complex>(src.roots.begin(), src.roots.begin() + 6)};
        const double r = 2.0;
        const Complex alpha = src.roots.back() * 0.9;
        if (F.is_zero() || std::abs(alpha) >= r) continue;
        const OneStepEnergies e = one_step_energies(F, alpha, r, 8 * (F.degree() + 2));
        const double bound =
            e.f_prime_energy - (1.0 - std::norm(alpha) / (r * r)) * e.f_energy;
        CHECK(e.g_prime_energy <= bound + 1e-9 * e.f_prime_energy);
    }
}

TEST_CASE("one_step_energies rejects bad input") {
    const Polynomial one({Complex{1.0, 0.0}});
    CHECK_THROWS_AS(one_step_energies(one, Complex{2.0, 0.0}, 1.0, 64), RootOutsideDisk);
    CHECK_THROWS_AS(one_step_energies(one, Complex{}, 1.0, 4), std::invalid_argument);
}

TEST_CASE("coefficient reflection at radius 1") {
    // monic, all roots inside the unit disk and nonzero
    const RootForm rf = test_support::degree4_example();
    RootForm inside = rf;
    for (Complex& a : inside.roots) a *= 0.8;  // pull the 1.14-modulus root inside
    const Polynomial f = from_roots(inside);
    const Polynomial g = factorize(inside, 1.0).g;
    const std::size_t n = inside.roots.size();
    for (std::size_t k = 0; k <= n; ++k) {
        CHECK(std::abs(f.coeff(k) - std::conj(g.coeff(n - k))) < 1e-10);
    }
}
