#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "unwinding/errors.hpp"
#include "unwinding/quadrature.hpp"
#include "unwinding/sweep.hpp"
#include "unwinding/unwind.hpp"

using namespace unwinding;
using test_support::degree4_example;

TEST_CASE("next_radius per variant") {
    const std::vector<Complex> roots{Complex{0.5, 0.0}, Complex{0.25, 0.0}};
    CHECK(next_radius(roots, RadiusSchedule::minimal_capture(1.1), {}) ==
          doctest::Approx(0.55));
    CHECK(next_radius({Complex{0.5, 0.0}}, RadiusSchedule::contraction_615(), {}) ==
          doctest::Approx(3.075));
    CHECK(next_radius({Complex{}, Complex{}}, RadiusSchedule::fixed(2.0), {}) == 2.0);
    // zero fallback for the capture-based variants
    CHECK(next_radius({Complex{}}, RadiusSchedule::minimal_capture(1.5), {}) == 1.5);
    CHECK(next_radius({Complex{}}, RadiusSchedule::contraction_615(), {}) ==
          doctest::Approx(6.15));
}

TEST_CASE("next_radius jitters away from a boundary collision") {
    // Fixed(1) with a root exactly at modulus 1: one jitter resolves it.
    const std::vector<Complex> roots{Complex{1.0, 0.0}};
    const double r = next_radius(roots, RadiusSchedule::fixed(1.0), {});
    CHECK(r == doctest::Approx(1.0 + 1e-6));
    CHECK(std::abs(std::abs(roots[0]) - r) >= kBoundaryTolRel * r);
}

TEST_CASE("next_radius ostrowski escalation") {
    // min nonzero root 0.5 with a zero root present: displacement bound is 0,
    // eps = 0.5, so the escalation term is 6.15 * prev^2 / 0.5.
    const std::vector<Complex> roots{Complex{}, Complex{0.5, 0.0}, Complex{1.0, 0.0}};
    const double r = next_radius(roots, RadiusSchedule::ostrowski(), 4.0);
    CHECK(r == doctest::Approx(6.15 * 16.0 / 0.5));
    // without a previous radius it reduces to the 6.15 capture rule
    CHECK(next_radius(roots, RadiusSchedule::ostrowski(), {}) == doctest::Approx(6.15));
}

TEST_CASE("unwind of z^n is a single exact term") {
    std::vector<Complex> coeffs(6, Complex{});
    coeffs[5] = Complex{1.0, 0.0};
    const Polynomial F{std::move(coeffs)};
    const UnwindingSeries s = unwind(F, RadiusSchedule::fixed(2.0), 10);
    REQUIRE(s.terms.size() == 1);
    CHECK(std::abs(s.terms[0].a - Complex{32.0, 0.0}) < 1e-12);  // r^n
    CHECK(s.degrees[0] == 0);
    const Complex z = std::polar(1.0, 0.9);
    CHECK(std::abs(eval_partial(s, 1, z) - F(z)) < 1e-12);
}

TEST_CASE("degree-1 polynomials unwind exactly in one term") {
    const Polynomial F({Complex{0.3, -0.7}, Complex{2.0, 1.0}});
    const UnwindingSeries s = unwind(F, RadiusSchedule::contraction_615(), 5);
    REQUIRE(s.terms.size() == 1);
    for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(1.3, kTwoPi * j / 16.0);
        CHECK(std::abs(eval_partial(s, 1, z) - F(z)) < 1e-12);
    }
}

TEST_CASE("the degree-4 example is exact within 4 terms at radius 1") {
    const Polynomial F = from_roots(degree4_example());
    const UnwindingSeries s = unwind(F, RadiusSchedule::fixed(1.0), 10);
    CHECK(s.terms.size() <= 4);
    double worst = 0.0;
    for (int j = 0; j < 256; ++j) {
        const Complex z = std::polar(1.0, kTwoPi * j / 256.0);
        worst = std::max(worst,
                         std::abs(F(z) - eval_partial(s, static_cast<int>(s.terms.size()), z)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("eval_partial") {
    const Polynomial F = from_roots(degree4_example());
    const UnwindingSeries s = unwind(F, RadiusSchedule::fixed(1.0), 10);

    CHECK(eval_partial(s, 0, Complex{0.3, 0.1}) == s.f0);

    const Complex z = std::polar(1.0, 0.3);
    CHECK(std::abs(eval_partial(s, static_cast<int>(s.terms.size()), z) - F(z)) < 1e-8);

    CHECK_THROWS_AS(eval_partial(s, static_cast<int>(s.terms.size()) + 1, z),
                    std::invalid_argument);
}

TEST_CASE("taylor_partial") {
    const Polynomial F({Complex{}, Complex{3.0, 0.0}, Complex{1.0, 0.0}});  // z^2+3z
    CHECK(taylor_partial(F, 0, Complex{2.0, 0.0}) == Complex{});
    CHECK(std::abs(taylor_partial(F, 1, Complex{2.0, 0.0}) - Complex{6.0, 0.0}) < 1e-15);
    CHECK(std::abs(taylor_partial(F, 2, Complex{2.0, 0.0}) - F(Complex{2.0, 0.0})) < 1e-15);
    CHECK_THROWS_AS(taylor_partial(F, 3, Complex{}), std::invalid_argument);
}

TEST_CASE("z^n: the power series needs n terms, the unwinding one") {
    std::vector<Complex> coeffs(6, Complex{});
    coeffs[5] = Complex{1.0, 0.0};
    const Polynomial F{std::move(coeffs)};
    const Complex z = std::polar(1.0, 1.1);
    // truncated power series misses everything below L = n
    CHECK(std::abs(F(z) - taylor_partial(F, 4, z)) == doctest::Approx(1.0));
    CHECK(std::abs(F(z) - taylor_partial(F, 5, z)) < 1e-15);
    // one unwinding term is exact
    const UnwindingSeries s = unwind(F, RadiusSchedule::fixed(1.0), 5);
    CHECK(s.terms.size() == 1);
    CHECK(std::abs(F(z) - eval_partial(s, 1, z)) < 1e-12);
}

TEST_CASE("series metadata: a_i is the constant coefficient of each outer factor") {
    const Polynomial F = from_roots(degree4_example());
    const UnwindingSeries s = unwind(F, RadiusSchedule::minimal_capture(1.3), 10);
    REQUIRE(!s.terms.empty());
    CHECK(s.radii.size() == s.terms.size());
    CHECK(s.degrees.size() == s.terms.size());
    int prev = F.degree();
    for (int d : s.degrees) {
        CHECK(d <= prev - 1);
        prev = d;
    }
}

TEST_CASE("termination and degree decrease across schedules, seeded") {
    // the 6.15-margin schedules escalate radii geometrically, so their
    // double-precision degree budget is tighter than the fixed/minimal ones
    const std::pair<RadiusSchedule, int> corpus[] = {
        {RadiusSchedule::fixed(2.5), 30},
        {RadiusSchedule::minimal_capture(1.1), 30},
        {RadiusSchedule::contraction_615(), 20},
        {RadiusSchedule::ostrowski(), 20},
    };
    for (int i = 0; i < 6; ++i) {
        for (const auto& [sched, max_degree] : corpus) {
            const std::uint64_t seed = sample_seed(0x77ULL, static_cast<std::uint64_t>(i));
            const int degree = 1 + static_cast<int>(seed % max_degree);
            const Polynomial F = from_roots(gen_random_poly(degree, 25.0, seed));
            const UnwindingSeries s = unwind(F, sched, degree);
            CHECK(static_cast<int>(s.terms.size()) <= degree);
            CHECK(s.degrees.back() >= 0);
            int prev = degree;
            for (int d : s.degrees) {
                CHECK(d <= prev - 1);
                prev = d;
            }
            // full series reproduces F on the unit circle
            double worst = 0.0, max_f = 0.0;
            for (int j = 0; j < 128; ++j) {
                const Complex z = std::polar(1.0, kTwoPi * j / 128.0);
                max_f = std::max(max_f, std::abs(F(z)));
                worst = std::max(worst, std::abs(F(z) - eval_partial(
                                                      s, static_cast<int>(s.terms.size()), z)));
            }
            CHECK(worst <= 1e-8 * (1.0 + max_f));
        }
    }
}

TEST_CASE("capture-based schedules capture every root each step") {
    for (int i = 0; i < 5; ++i) {
        const std::uint64_t seed = sample_seed(0xCAFEULL, static_cast<std::uint64_t>(i));
        const int degree = 2 + static_cast<int>(seed % 18);
        const Polynomial F = from_roots(gen_random_poly(degree, 25.0, seed));
        for (const RadiusSchedule& sched :
             {RadiusSchedule::minimal_capture(1.1), RadiusSchedule::contraction_615()}) {
            const UnwindingSeries s = unwind(F, sched, degree);
            int h_degree = degree;
            for (std::size_t step = 0; step < s.terms.size(); ++step) {
                CHECK(static_cast<int>(s.terms[step].b.captured.size()) == h_degree);
                h_degree = s.degrees[step];
            }
        }
    }
}

TEST_CASE("unwind input validation") {
    CHECK_THROWS_AS(unwind(Polynomial({Complex{1.0, 0.0}}), RadiusSchedule::fixed(1.0), 3),
                    std::invalid_argument);
    const Polynomial F({Complex{}, Complex{1.0, 0.0}});
    CHECK_THROWS_AS(unwind(F, RadiusSchedule::fixed(1.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(RadiusSchedule::fixed(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(RadiusSchedule::minimal_capture(1.0), std::invalid_argument);
}
