#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "cubicdec/batch.hpp"
#include "cubicdec/corpus.hpp"
#include "cubicdec/json_io.hpp"
#include "test_graphs.hpp"

using namespace cubicdec;
using namespace testgraphs;

namespace {

// record stream with timing removed, for determinism comparisons
std::string stable_jsonl(const std::vector<batch_record>& records) {
  std::string out;
  for (const batch_record& r : records) {
    nlohmann::json j = r.to_json();
    j.erase("millis");
    out += j.dump();
    out += '\n';
  }
  return out;
}

} // namespace

TEST_CASE("serial batch clears the n=8 census") {
  batch_result res = run_batch_serial(generate_exhaustive(8));
  REQUIRE(res.summary.total == 5);
  CHECK(res.summary.failures == 0);
  for (const batch_record& r : res.records) {
    CAPTURE(r.graph6);
    CHECK(r.traceable);
    CHECK(r.verified);
    CHECK(r.cycle_count <= 2);
    CHECK(r.proof_gaps == 0);
    CHECK_FALSE(r.failed());
  }
}

TEST_CASE("parallel batch matches the serial reference") {
  auto graphs = generate_exhaustive(10);
  batch_options par;
  par.parallel = true;
  par.workers = 3;
  batch_result serial = run_batch_serial(graphs);
  batch_result parallel = run_batch(graphs, par);
  CHECK(stable_jsonl(serial.records) == stable_jsonl(parallel.records));
  CHECK(serial.summary.failures == parallel.summary.failures);
  CHECK(serial.summary.branch_histogram == parallel.summary.branch_histogram);
}

TEST_CASE("repeated runs emit identical records up to timing") {
  std::vector<cubic_graph> graphs = {petersen(), prism(), cube(), k33()};
  CHECK(stable_jsonl(run_batch_serial(graphs).records) ==
        stable_jsonl(run_batch_serial(graphs).records));
}

TEST_CASE("non-traceable graphs are recorded without counting as failures") {
  batch_result res = run_batch_serial({nontraceable_gadget()});
  REQUIRE(res.summary.total == 1);
  CHECK(res.summary.failures == 0);
  CHECK_FALSE(res.records[0].traceable);
  CHECK(res.records[0].branch == "NotTraceable");
  CHECK_FALSE(res.records[0].failed());
}

TEST_CASE("a refused instance surfaces as a failure") {
  batch_options opts;
  opts.decompose.case2_bound = 4;
  opts.decompose.scan_cap = 1;
  batch_result res = run_batch_serial({disjoint_no_long_chord_gadget()}, opts);
  REQUIRE(res.summary.total == 1);
  CHECK(res.summary.failures == 1);
  CHECK(res.records[0].branch == "Case2Refused");
  CHECK(res.records[0].traceable);
  CHECK_FALSE(res.records[0].verified);
}

TEST_CASE("oracle cross-check agrees on small graphs") {
  batch_options opts;
  opts.check_oracle = true;
  batch_result res = run_batch_serial(generate_exhaustive(6), opts);
  for (const batch_record& r : res.records) {
    REQUIRE(r.oracle_agrees.has_value());
    CHECK(*r.oracle_agrees);
  }
  CHECK(res.summary.failures == 0);
}

TEST_CASE("failure predicate covers each rule") {
  batch_record r;
  r.traceable = true;
  r.verified = true;
  CHECK_FALSE(r.failed());
  r.error = "boom";
  CHECK(r.failed());
  r.error.clear();
  r.verified = false;
  CHECK(r.failed());
  r.verified = true;
  r.proof_gaps = 1;
  CHECK(r.failed());
  r.proof_gaps = 0;
  r.oracle_agrees = false;
  CHECK(r.failed());
  r.oracle_agrees = true;
  CHECK_FALSE(r.failed());
}

TEST_CASE("histogram pools branch and via tags") {
  batch_result res = run_batch_serial({p2_collapse_gadget()});
  REQUIRE(res.summary.total == 1);
  CHECK(res.summary.branch_histogram.count("Case1.P2Order2") == 1);
  CHECK(res.summary.branch_histogram.count(res.records[0].branch) == 1);
}

TEST_CASE("decompose report carries the full payload") {
  cubic_graph g = prism();
  decompose_output out = decompose(g);
  nlohmann::json j = decompose_report(g, out);
  CHECK(j["n"] == 6);
  CHECK(j["status"] == "ok");
  CHECK(j["trace"]["branch"] == "Case1.Sub2.a");
  CHECK(j["trace"]["proof_gaps"] == 0);
  CHECK(j["decomposition"]["tree"].size() == 5);
  CHECK(j["decomposition"]["cycles"].size() == 1);

  std::string line = to_jsonl(run_batch_serial({g}).records);
  nlohmann::json row = nlohmann::json::parse(line);
  CHECK(row["branch"] == "Case1.Sub2.a");
  CHECK(row["verified"] == true);
}
