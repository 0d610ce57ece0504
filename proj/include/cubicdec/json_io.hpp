#pragma once

#include <string>

#include "json.hpp"

#include "cubicdec/decomposer.hpp"
#include "cubicdec/plan.hpp"

namespace cubicdec {

nlohmann::json to_json(const edge_set& edges);
nlohmann::json to_json(const decomposition& dec);
nlohmann::json to_json(const trace_log& trace);

// full result payload: graph size, the three parts, and the trace
nlohmann::json decompose_report(const cubic_graph& g, const decompose_output& out);

} // namespace cubicdec
