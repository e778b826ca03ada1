#include "unwinding/json_io.hpp"

#include <fstream>

#include "unwinding/errors.hpp"

namespace unwinding {

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw Error("expected a [re, im] pair");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

namespace {

std::vector<Complex> complex_list(const json& j) {
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& item : j) out.push_back(complex_from_json(item));
    return out;
}

json complex_list_to_json(const std::vector<Complex>& v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back(to_json(z));
    return out;
}

}  // namespace

json to_json(const Polynomial& p) { return json{{"coeffs", complex_list_to_json(p.coeffs())}}; }

Polynomial polynomial_from_json(const json& j) {
    if (!j.contains("coeffs")) throw Error("polynomial JSON requires a coeffs array");
    return Polynomial(complex_list(j.at("coeffs")));
}

json to_json(const RootForm& rf) {
    return json{{"lead", to_json(rf.lead)}, {"roots", complex_list_to_json(rf.roots)}};
}

RootForm rootform_from_json(const json& j) {
    RootForm rf;
    rf.lead = complex_from_json(j.at("lead"));
    rf.roots = complex_list(j.at("roots"));
    return rf;
}

json to_json(const RBlaschkeProduct& b) {
    return json{{"radius", b.radius}, {"captured", complex_list_to_json(b.captured)}};
}

RBlaschkeProduct blaschke_from_json(const json& j) {
    RBlaschkeProduct b;
    b.radius = j.at("radius").get<double>();
    b.captured = complex_list(j.at("captured"));
    return b;
}

json to_json(const Factorization& f) {
    return json{{"b", to_json(f.b)}, {"g", to_json(f.g)}, {"residual", f.residual}};
}

json to_json(const UnwindingSeries& s) {
    json terms = json::array();
    for (const UnwindTerm& t : s.terms) {
        terms.push_back(json{{"a", to_json(t.a)}, {"b", to_json(t.b)}});
    }
    return json{{"f0", to_json(s.f0)},
                {"radii", s.radii},
                {"terms", terms},
                {"degrees", s.degrees}};
}

UnwindingSeries series_from_json(const json& j) {
    UnwindingSeries s;
    s.f0 = complex_from_json(j.at("f0"));
    s.radii = j.at("radii").get<std::vector<double>>();
    s.degrees = j.at("degrees").get<std::vector<int>>();
    for (const json& t : j.at("terms")) {
        s.terms.push_back({complex_from_json(t.at("a")), blaschke_from_json(t.at("b"))});
    }
    return s;
}

json to_json(const ContractionReport& r) {
    return json{{"lhs", r.lhs},
                {"rhs", r.rhs},
                {"holds", r.holds},
                {"lambda_used", r.lambda_used},
                {"slack", r.slack}};
}

json to_json(const std::vector<CheckResult>& results) {
    json out = json::object();
    for (const CheckResult& r : results) {
        out[r.name] = json{{"cases", r.cases},
                           {"failures", r.failures},
                           {"worst_slack", r.worst_slack}};
    }
    return out;
}

SweepConfig sweep_config_from_json(const json& j) {
    SweepConfig cfg;
    cfg.degree = j.at("n").get<int>();
    cfg.root_disk = j.at("m").get<double>();
    cfg.radii = j.at("radii").get<std::vector<double>>();
    cfg.samples = j.at("samples").get<int>();
    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    cfg.l_max = j.value("L_max", cfg.degree > 1 ? cfg.degree - 1 : 1);
    cfg.quad_tol = j.value("quad_tol", 1e-10);
    return cfg;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace unwinding
