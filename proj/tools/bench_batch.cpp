// benchmark: serial batch against the OpenMP batch on one corpus, with a
// record-equality check so the parallel path is validated on every run
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicdec/batch.hpp"
#include "cubicdec/corpus.hpp"

using namespace cubicdec;

namespace {

double run_ms(const std::vector<cubic_graph>& graphs, const batch_options& opts,
              batch_result& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = run_batch(graphs, opts);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string stable_dump(const std::vector<batch_record>& records) {
  std::string s;
  for (const batch_record& r : records) {
    nlohmann::json j = r.to_json();
    j.erase("millis");
    s += j.dump();
    s += '\n';
  }
  return s;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the serial batch with the parallel one"};
  int census = 12;
  int random_n = 0, count = 200;
  std::uint64_t seed = 7;
  int workers = 0;
  int repeats = 3;
  app.add_option("--census", census, "exhaustive corpus of this order")->capture_default_str();
  app.add_option("--random", random_n, "use a random corpus of this order instead");
  app.add_option("--count", count, "random corpus size")->capture_default_str();
  app.add_option("--seed", seed, "random corpus seed")->capture_default_str();
  app.add_option("--workers", workers, "parallel threads, 0 = all cores")->capture_default_str();
  app.add_option("--repeats", repeats, "timed repetitions, best-of")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<cubic_graph> graphs =
      random_n > 0 ? generate_random(random_n, count, seed) : generate_exhaustive(census);

  batch_options serial_opts;
  batch_options par_opts;
  par_opts.parallel = true;
  par_opts.workers = workers;

  batch_result serial_res, par_res;
  double best_serial = 0, best_par = 0;
  for (int r = 0; r < repeats; ++r) {
    double s = run_ms(graphs, serial_opts, serial_res);
    double p = run_ms(graphs, par_opts, par_res);
    if (r == 0 || s < best_serial) best_serial = s;
    if (r == 0 || p < best_par) best_par = p;
  }

  bool match = stable_dump(serial_res.records) == stable_dump(par_res.records);
  nlohmann::json j = {
      {"graphs", graphs.size()},
      {"failures", serial_res.summary.failures},
      {"serial_ms", best_serial},
      {"parallel_ms", best_par},
      {"speedup", best_par > 0 ? best_serial / best_par : 0.0},
      {"workers", workers},
      {"records_match", match},
  };
  std::cout << j.dump(2) << '\n';
  return match ? 0 : 1;
}
