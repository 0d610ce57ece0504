#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubicdec/decomposer.hpp"
#include "cubicdec/graph.hpp"

namespace cubicdec {

struct batch_record {
  std::string graph6;
  int n = 0;
  bool traceable = false;
  std::string branch;
  std::vector<std::string> via;
  int cycle_count = 0;
  bool verified = false;
  int proof_gaps = 0;
  std::optional<bool> oracle_agrees;
  double millis = 0.0;
  std::string error; // non-empty when the pipeline threw

  bool failed() const;
  nlohmann::json to_json() const;
};

struct batch_percentiles {
  double p50 = 0.0, p90 = 0.0, p99 = 0.0, max = 0.0;
};

struct batch_summary {
  int total = 0;
  int failures = 0;
  std::map<std::string, int> branch_histogram; // branch and via tags pooled
  batch_percentiles timing;

  nlohmann::json to_json() const;
};

struct batch_options {
  decompose_options decompose;
  bool check_oracle = false;  // cross-check each verdict against brute force
  std::uint64_t oracle_budget = 0;
  bool parallel = false;
  int workers = 0; // 0 keeps the OpenMP default
};

struct batch_result {
  std::vector<batch_record> records; // input order regardless of scheduling
  batch_summary summary;
};

// decompose + verify every graph; the parallel path uses OpenMP when built
// with it and falls back to the serial loop otherwise
batch_result run_batch(const std::vector<cubic_graph>& graphs, const batch_options& opts = {});

// single-threaded reference used to pin down the parallel path in tests
batch_result run_batch_serial(const std::vector<cubic_graph>& graphs,
                              const batch_options& opts = {});

// one JSON object per line, keys sorted, trailing newline
std::string to_jsonl(const std::vector<batch_record>& records);

} // namespace cubicdec
