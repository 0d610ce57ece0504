#include "cubicdec/batch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubicdec/oracle.hpp"
#include "cubicdec/plan.hpp"

namespace cubicdec {

namespace {

batch_record process_one(const cubic_graph& g, const batch_options& opts) {
  batch_record r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  auto t0 = std::chrono::steady_clock::now();
  try {
    decompose_output out = decompose(g, opts.decompose);
    r.traceable = out.status != decompose_status::not_traceable;
    r.branch = out.trace.branch;
    r.via = out.trace.via;
    r.proof_gaps = out.trace.proof_gaps;
    if (out.status == decompose_status::ok) {
      r.cycle_count = static_cast<int>(out.dec.cycles.size());
      r.verified = out.dec.cycles.size() <= 2 && verify_decomposition(g, out.dec).ok;
    }
    if (opts.check_oracle &&
        (out.status == decompose_status::ok || out.status == decompose_status::oracle_exhausted)) {
      oracle_result brute = brute_force_decompose(g, opts.oracle_budget);
      if (brute.exhausted) r.oracle_agrees = brute.found == (out.status == decompose_status::ok);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

batch_summary summarize(const std::vector<batch_record>& records) {
  batch_summary s;
  s.total = static_cast<int>(records.size());
  std::vector<double> times;
  times.reserve(records.size());
  for (const batch_record& r : records) {
    if (r.failed()) ++s.failures;
    if (!r.error.empty()) {
      ++s.branch_histogram["Error"];
    } else {
      if (!r.branch.empty()) ++s.branch_histogram[r.branch];
      for (const std::string& tag : r.via) ++s.branch_histogram[tag];
    }
    times.push_back(r.millis);
  }
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    auto at = [&](double q) {
      return times[static_cast<size_t>(q * static_cast<double>(times.size() - 1))];
    };
    s.timing = {at(0.50), at(0.90), at(0.99), times.back()};
  }
  return s;
}

} // namespace

bool batch_record::failed() const {
  if (!error.empty()) return true;
  if (traceable && !verified) return true;
  if (proof_gaps > 0) return true;
  if (oracle_agrees.has_value() && !*oracle_agrees) return true;
  return false;
}

nlohmann::json batch_record::to_json() const {
  nlohmann::json j = {{"graph6", graph6},   {"n", n},
                      {"traceable", traceable}, {"branch", branch},
                      {"via", via},         {"cycle_count", cycle_count},
                      {"verified", verified},   {"proof_gaps", proof_gaps},
                      {"millis", millis}};
  if (oracle_agrees.has_value()) j["oracle_agrees"] = *oracle_agrees;
  if (!error.empty()) j["error"] = error;
  return j;
}

nlohmann::json batch_summary::to_json() const {
  return {{"total", total},
          {"failures", failures},
          {"branch_histogram", branch_histogram},
          {"timing",
           {{"p50_ms", timing.p50},
            {"p90_ms", timing.p90},
            {"p99_ms", timing.p99},
            {"max_ms", timing.max}}}};
}

batch_result run_batch_serial(const std::vector<cubic_graph>& graphs, const batch_options& opts) {
  batch_result res;
  res.records.reserve(graphs.size());
  for (const cubic_graph& g : graphs) res.records.push_back(process_one(g, opts));
  res.summary = summarize(res.records);
  return res;
}

batch_result run_batch(const std::vector<cubic_graph>& graphs, const batch_options& opts) {
  if (!opts.parallel) return run_batch_serial(graphs, opts);
#ifdef _OPENMP
  batch_result res;
  res.records.resize(graphs.size());
  int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(graphs.size()); ++k)
    res.records[static_cast<size_t>(k)] = process_one(graphs[static_cast<size_t>(k)], opts);
  res.summary = summarize(res.records);
  return res;
#else
  return run_batch_serial(graphs, opts);
#endif
}

std::string to_jsonl(const std::vector<batch_record>& records) {
  std::string out;
  for (const batch_record& r : records) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

} // namespace cubicdec
