#include "cubicdec/json_io.hpp"

namespace cubicdec {

nlohmann::json to_json(const edge_set& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

nlohmann::json to_json(const decomposition& dec) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const edge_set& c : dec.cycles) cycles.push_back(to_json(c));
  return {{"tree", to_json(dec.tree)}, {"matching", to_json(dec.matching)}, {"cycles", cycles}};
}

nlohmann::json to_json(const trace_log& trace) {
  return {{"branch", trace.branch},
          {"via", trace.via},
          {"witnesses", trace.witnesses},
          {"path", trace.path},
          {"gap_details", trace.gap_details},
          {"proof_gaps", trace.proof_gaps}};
}

nlohmann::json decompose_report(const cubic_graph& g, const decompose_output& out) {
  nlohmann::json j = {{"n", g.order()},
                      {"graph6", write_graph6(g)},
                      {"status", to_string(out.status)},
                      {"trace", to_json(out.trace)}};
  if (out.status == decompose_status::ok) j["decomposition"] = to_json(out.dec);
  return j;
}

} // namespace cubicdec
