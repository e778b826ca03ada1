#include "unwinding/unwind.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "unwinding/errors.hpp"
#include "unwinding/roots.hpp"

namespace unwinding {

RadiusSchedule RadiusSchedule::fixed(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("fixed schedule requires r > 0");
    }
    return {Kind::kFixed, r};
}

RadiusSchedule RadiusSchedule::minimal_capture(double margin) {
    if (!(margin > 1.0) || !std::isfinite(margin)) {
        throw std::invalid_argument("minimal capture schedule requires margin > 1");
    }
    return {Kind::kMinimalCapture, margin};
}

RadiusSchedule RadiusSchedule::contraction_615() {
    return {Kind::kContraction615, kContractionFactor};
}

RadiusSchedule RadiusSchedule::ostrowski() {
    return {Kind::kOstrowski, kContractionFactor};
}

namespace {

double max_nonzero_modulus(const std::vector<Complex>& roots) {
    double m = 0.0;
    for (const Complex& a : roots) m = std::max(m, std::abs(a));
    return m;
}

double capture_radius(const std::vector<Complex>& roots, double margin) {
    const double m = max_nonzero_modulus(roots);
    return margin * (m > 0.0 ? m : 1.0);
}

}  // namespace

double next_radius(const std::vector<Complex>& current_roots,
                   const RadiusSchedule& schedule,
                   std::optional<double> prev_radius) {
    double base = 0.0;
    switch (schedule.kind) {
        case RadiusSchedule::Kind::kFixed:
            base = schedule.value;
            break;
        case RadiusSchedule::Kind::kMinimalCapture:
        case RadiusSchedule::Kind::kContraction615: {
            if (current_roots.empty()) {
                throw std::invalid_argument("capture-based schedule requires roots");
            }
            const double margin = schedule.kind == RadiusSchedule::Kind::kMinimalCapture
                                      ? schedule.value
                                      : kContractionFactor;
            base = capture_radius(current_roots, margin);
            break;
        }
        case RadiusSchedule::Kind::kOstrowski: {
            if (current_roots.empty()) {
                throw std::invalid_argument("capture-based schedule requires roots");
            }
            base = capture_radius(current_roots, kContractionFactor);
            if (prev_radius) {
                const std::size_t n = current_roots.size();
                double min_nonzero = 0.0;
                double log_prod = 0.0;
                bool has_zero = false;
                for (const Complex& a : current_roots) {
                    const double m = std::abs(a);
                    if (m == 0.0) {
                        has_zero = true;
                        continue;
                    }
                    if (min_nonzero == 0.0 || m < min_nonzero) min_nonzero = m;
                    log_prod += std::log(m);
                }
                if (min_nonzero > 0.0) {
                    const double displacement =
                        has_zero ? 0.0
                                 : 2.0 * static_cast<double>(n) *
                                       std::exp(log_prod / static_cast<double>(n));
                    const double guaranteed = min_nonzero - displacement;
                    if (guaranteed > 0.0) {
                        const double eps = std::max(guaranteed, 1e-6 * *prev_radius);
                        base = std::max(base, kContractionFactor * *prev_radius *
                                                  (*prev_radius / eps));
                    }
                }
            }
            break;
        }
    }
    if (!(base > 0.0) || !std::isfinite(base)) {
        throw RadiusSelectionFailed("schedule produced a non-finite radius");
    }

    double r = base;
    for (int attempt = 0; attempt <= 3; ++attempt) {
        bool collision = false;
        for (const Complex& a : current_roots) {
            if (std::abs(std::abs(a) - r) < kBoundaryTolRel * r) {
                collision = true;
                break;
            }
        }
        if (!collision) return r;
        r *= 1.0 + 1e-6;
    }
    throw RadiusSelectionFailed("a root stayed on the circle after 3 jitter retries");
}

UnwindingSeries unwind(const Polynomial& F, const RadiusSchedule& schedule,
                       int max_terms) {
    if (F.degree() < 1 || F.is_zero()) {
        throw std::invalid_argument("unwind requires degree >= 1");
    }
    if (max_terms < 1) throw std::invalid_argument("unwind requires max_terms >= 1");

    UnwindingSeries series;
    series.f0 = F.coeff(0);

    Polynomial h = recenter(F);
    std::optional<double> prev_radius;
    while (static_cast<int>(series.terms.size()) < max_terms) {
        RootForm rf;
        try {
            rf = find_roots(h);
        } catch (const Error& e) {
            throw RootFindingFailed("step " + std::to_string(series.terms.size()) +
                                    ": " + e.what());
        }
        for (Complex& a : rf.roots) {
            if (std::abs(a) < kRootSnapTol) a = Complex{};
        }
        const double r = next_radius(rf.roots, schedule, prev_radius);
        Factorization fact;
        try {
            fact = factorize(rf, r);
        } catch (const std::invalid_argument&) {
            // Only overflow of the expanded outer factor reaches here; the
            // escalating-radius schedules can leave double range.
            throw RadiusSelectionFailed(
                "step " + std::to_string(series.terms.size()) +
                ": radius " + std::to_string(r) + " overflows the outer factor");
        }
        series.terms.push_back({fact.g.coeff(0), fact.b});
        series.radii.push_back(r);
        series.degrees.push_back(fact.g.degree());
        prev_radius = r;
        if (fact.g.degree() == 0) break;
        h = recenter(fact.g);
    }
    return series;
}

Complex eval_partial(const UnwindingSeries& s, int L, Complex z) {
    if (L < 0 || L > static_cast<int>(s.terms.size())) {
        throw std::invalid_argument("eval_partial: L out of range");
    }
    Complex acc = s.f0;
    Complex prod{1.0, 0.0};
    for (int i = 0; i < L; ++i) {
        prod *= s.terms[static_cast<std::size_t>(i)].b(z);
        acc += s.terms[static_cast<std::size_t>(i)].a * prod;
    }
    return acc;
}

Complex taylor_partial(const Polynomial& F, int L, Complex z) {
    if (L < 0 || L > F.degree()) {
        throw std::invalid_argument("taylor_partial: L out of range");
    }
    Complex acc{};
    for (int k = L; k >= 0; --k) acc = acc * z + F.coeff(static_cast<std::size_t>(k));
    return acc;
}

}  // namespace unwinding
