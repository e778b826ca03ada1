#pragma once

#include <string>

#include <json.hpp>

#include "unwinding/blaschke.hpp"
#include "unwinding/metrics.hpp"
#include "unwinding/polynomial.hpp"
#include "unwinding/sweep.hpp"
#include "unwinding/unwind.hpp"
#include "unwinding/verify.hpp"

namespace unwinding {

using nlohmann::json;

// Complex values serialize as [re, im]; the wire forms are
//   Polynomial        {"coeffs": [[re, im], ...]} ascending
//   RootForm          {"lead": [re, im], "roots": [[re, im], ...]}
//   RBlaschkeProduct  {"radius": r, "captured": [[re, im], ...]}
//   Factorization     {"b": ..., "g": ..., "residual": r}
//   UnwindingSeries   {"f0": ..., "radii": [...], "terms": [{"a": ..., "b": ...}], "degrees": [...]}

json to_json(const Complex& z);
Complex complex_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RootForm& rf);
RootForm rootform_from_json(const json& j);

json to_json(const RBlaschkeProduct& b);
RBlaschkeProduct blaschke_from_json(const json& j);

json to_json(const Factorization& f);

json to_json(const UnwindingSeries& s);
UnwindingSeries series_from_json(const json& j);

json to_json(const ContractionReport& r);

json to_json(const std::vector<CheckResult>& results);

SweepConfig sweep_config_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace unwinding
