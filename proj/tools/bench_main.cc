// Timing of the OpenMP kernels against their serial references.
//
//   srl_bench [--instances N] [--tokens T] [--roles R] [--repeat K] [--seed S]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srl/emissions.h"
#include "srl/eval.h"
#include "srl/labels.h"
#include "srl/rng.h"
#include "srl/synthetic.h"
#include "srl/viterbi.h"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double BestSeconds(int repeat, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto start = Clock::now();
    body();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds < best) best = seconds;
  }
  return best;
}

std::vector<srl::EmissionMatrix> RandomBatch(int instances, int tokens, int tags, uint64_t seed) {
  srl::SplitMix64 rng(seed);
  std::vector<srl::EmissionMatrix> batch;
  batch.reserve(instances);
  for (int i = 0; i < instances; ++i) {
    srl::EmissionMatrix m(std::to_string(i + 1) + ":0", tokens, tags);
    for (int t = 0; t < tokens; ++t)
      for (int j = 0; j < tags; ++j) m.at(t, j) = -8.0 * rng.Uniform();
    batch.push_back(std::move(m));
  }
  return batch;
}

void Row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.4f %10.4f %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int instances = 4000, tokens = 40, roles = 26, repeat = 3;
  uint64_t seed = 7;
  CLI::App app{"Serial vs parallel kernel timings", "srl_bench"};
  app.add_option("--instances", instances)->check(CLI::PositiveNumber);
  app.add_option("--tokens", tokens)->check(CLI::PositiveNumber);
  app.add_option("--roles", roles)->check(CLI::Range(1, 26));
  app.add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::string>& all = srl::PropBankLikeRoles();
  const srl::LabelSet labels(std::vector<std::string>(all.begin(), all.begin() + roles));
  const auto batch = RandomBatch(instances, tokens, labels.size(), seed);

  std::printf("threads %d, instances %d, tokens %d, tags %d\n", omp_get_max_threads(), instances,
              tokens, labels.size());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "other s", "speedup");

  std::vector<srl::Decoded> a, b;
  const double serial = BestSeconds(repeat, [&] { a = srl::DecodeBatchSerial(batch, labels); });
  const double parallel = BestSeconds(repeat, [&] { b = srl::DecodeBatch(batch, labels); });
  Row("decode batch (omp)", serial, parallel);
  if (a != b) {
    std::cerr << "srl_bench: parallel decode differs from serial\n";
    return 1;
  }

  const int dense_count = std::min(instances, 500);
  const std::span<const srl::EmissionMatrix> head(batch.data(), dense_count);
  const double dense = BestSeconds(repeat, [&] {
    for (const auto& m : head) srl::ViterbiDecodeDense(m, labels);
  });
  const double fast = BestSeconds(repeat, [&] {
    for (const auto& m : head) srl::ViterbiDecode(m, labels);
  });
  Row("viterbi dense vs fast", dense, fast);

  std::vector<srl::LabeledInstance> gold, pred;
  for (size_t i = 0; i < batch.size(); ++i) {
    srl::TagSequence truth(b[i].tags);
    truth[truth.size() / 2] = 0;
    gold.push_back({batch[i].instance_id(), srl::TagsToSpans(truth, labels)});
    pred.push_back({batch[i].instance_id(), srl::TagsToSpans(b[i].tags, labels)});
  }
  srl::EvalReport ra, rb;
  const double score_serial = BestSeconds(repeat, [&] { ra = srl::ScoreSerial(gold, pred); });
  const double score_parallel = BestSeconds(repeat, [&] { rb = srl::Score(gold, pred); });
  Row("score (omp)", score_serial, score_parallel);
  if (!(ra == rb)) {
    std::cerr << "srl_bench: parallel score differs from serial\n";
    return 1;
  }
  return 0;
}
