/*
 * Copyright 2026 The bosonex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "bosonex/combinatorics.hpp"
#include "bosonex/complex_matrix.hpp"
#include "bosonex/haar.hpp"
#include "bosonex/permanent.hpp"
#include "bosonex/random.hpp"
#include "bosonex/sampler.hpp"
#include "bosonex/verification.hpp"

namespace {

using namespace bosonex;

// Substream index reserved for deriving the Haar matrix when a command
// generates its own input; sample substreams use indices 0..count-1.
constexpr std::uint64_t kMatrixStreamIndex = 0xb050e0ULL << 32;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      stream = &file;
    }
  }
  std::ostream& os() { return *stream; }
};

ComplexMatrix load_or_generate(const std::string& matrix_path, unsigned m,
                               std::uint64_t seed) {
  if (!matrix_path.empty()) return read_matrix_file(matrix_path);
  if (m == 0) {
    throw std::runtime_error("either --matrix or --m must be given");
  }
  RandomStream rng = RandomStream::substream(seed, kMatrixStreamIndex);
  return haar_unitary(m, rng);
}

void print_complex(std::ostream& os, Complex v) {
  char buf[96];
  int len = std::snprintf(buf, sizeof(buf), "%.17g %.17g", v.real(), v.imag());
  os.write(buf, len);
  os << '\n';
}

std::vector<unsigned> parse_pattern(const std::string& pattern) {
  std::vector<unsigned> s;
  std::stringstream ss(pattern);
  std::string token;
  while (std::getline(ss, token, ',')) {
    s.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  return s;
}

int cmd_haar(unsigned m, std::uint64_t seed, const std::string& out_path) {
  RandomStream rng(seed);
  ComplexMatrix u = haar_unitary(m, rng);
  Output out(out_path);
  write_matrix(out.os(), u);
  return 0;
}

int cmd_sample(const std::string& matrix_path, unsigned m, unsigned n,
               std::size_t count, std::uint64_t seed, unsigned threads,
               const std::string& out_path) {
  ComplexMatrix a = load_or_generate(matrix_path, m, seed);
  if (n < 1 || n > a.rows() || n > a.cols()) {
    std::cerr << "error: need 1 <= n <= m\n";
    return 2;
  }
  auto samples = sample_batch(a, n, count, seed, threads);
  Output out(out_path);
  write_samples(out.os(), samples, a.rows(), n, seed);
  return 0;
}

int cmd_perm(const std::string& matrix_path, const std::string& pattern,
             bool compensated) {
  ComplexMatrix b = read_matrix_file(matrix_path);
  PermanentOptions opts;
  opts.compensated = compensated;
  Complex value;
  if (pattern.empty()) {
    if (b.rows() != b.cols()) {
      std::cerr << "error: non-square matrix requires --pattern\n";
      return 2;
    }
    value = permanent_ryser(b, opts);
  } else {
    value = permanent_repeated(b, parse_pattern(pattern), opts);
  }
  print_complex(std::cout, value);
  return 0;
}

int cmd_pmf(const std::string& matrix_path, unsigned m, unsigned n,
            std::uint64_t seed, const std::string& out_path) {
  ComplexMatrix a = load_or_generate(matrix_path, m, seed);
  PmfTable table = exact_pmf(a, n);
  Output out(out_path);
  write_pmf(out.os(), table);
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<CheckResult> results;
  if (suite == "identities" || suite == "all") {
    auto identity = run_identity_checks();
    results.insert(results.end(), identity.begin(), identity.end());
  }
  if (suite == "statistical" || suite == "all") {
    auto statistical = run_statistical_checks(cfg);
    results.insert(results.end(), statistical.begin(), statistical.end());
  }
  write_report(std::cout, results);
  for (const auto& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}

int cmd_bench(unsigned n_min, unsigned n_max, double theta, std::size_t count,
              std::uint64_t seed, const std::string& out_path) {
  Output out(out_path);
  out.os() << "m,n,samples,mean_final_walk_tuples,predicted_walk_tuples,"
              "mean_seconds_per_sample\n";
  for (unsigned n = n_min; n <= n_max; ++n) {
    auto m = static_cast<unsigned>(std::lround(theta * n));
    if (count == 0) continue;
    RandomStream rng = RandomStream::substream(seed, kMatrixStreamIndex + n);
    ComplexMatrix u = haar_unitary(m, rng);
    std::vector<SamplerTrace> traces;
    auto start = std::chrono::steady_clock::now();
    sample_batch(u, n, count, seed + n, 1, &traces);
    auto stop = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(stop - start).count();
    double mean_walk = 0.0;
    for (const auto& trace : traces) {
      mean_walk += static_cast<double>(trace.stages.back().walk_tuples_full);
    }
    mean_walk /= static_cast<double>(count);
    double predicted =
        static_cast<double>(expected_multiplicity_product(m, n));
    char buf[160];
    int len = std::snprintf(buf, sizeof(buf), "%u,%u,%zu,%.8g,%.8g,%.4e\n", m,
                            n, count, mean_walk, predicted,
                            seconds / static_cast<double>(count));
    out.os().write(buf, len);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bosonex: exact classical Boson Sampling toolkit"};
  app.require_subcommand(1);

  unsigned m = 0, n = 0;
  std::uint64_t seed = 0;
  std::string matrix_path, out_path, pattern;
  std::size_t count = 1;
  unsigned threads = 1;
  bool compensated = false;
  std::string suite = "all";
  unsigned n_min = 4, n_max = 14;
  double theta = 1.0;
  VerifyConfig vcfg;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed")->envname("BOSONEX_SEED");
  };

  auto* haar_cmd = app.add_subcommand("haar", "emit a Haar random unitary");
  haar_cmd->add_option("--m", m, "matrix dimension")->required();
  add_seed(haar_cmd);
  haar_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* sample_cmd = app.add_subcommand("sample", "draw Boson Sampling samples");
  sample_cmd->add_option("--matrix", matrix_path, "input matrix file");
  sample_cmd->add_option("--m", m, "modes (Haar matrix generated from seed)");
  sample_cmd->add_option("--n", n, "photons")->required();
  sample_cmd->add_option("--count", count, "number of samples");
  sample_cmd->add_option("--threads", threads, "worker threads");
  add_seed(sample_cmd);
  sample_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* perm_cmd = app.add_subcommand("perm", "compute a matrix permanent");
  perm_cmd->add_option("--matrix", matrix_path, "input matrix file")->required();
  perm_cmd->add_option("--pattern", pattern,
                       "comma-separated row multiplicities (repeated-row kernel)");
  perm_cmd->add_flag("--compensated", compensated, "Kahan-compensated sums");

  auto* pmf_cmd = app.add_subcommand("pmf", "dump the exact pmf table");
  pmf_cmd->add_option("--matrix", matrix_path, "input matrix file");
  pmf_cmd->add_option("--m", m, "modes (Haar matrix generated from seed)");
  pmf_cmd->add_option("--n", n, "photons")->required();
  add_seed(pmf_cmd);
  pmf_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", suite, "all | identities | statistical")
      ->check(CLI::IsMember({"all", "identities", "statistical"}));
  verify_cmd->add_option("--m", vcfg.m, "modes for statistical checks");
  verify_cmd->add_option("--n", vcfg.n, "photons for statistical checks");
  verify_cmd->add_option("--matrices", vcfg.num_matrices, "Haar draws");
  verify_cmd->add_option("--samples", vcfg.num_samples, "sampler draws");
  verify_cmd->add_option("--seed", vcfg.seed, "random seed")
      ->envname("BOSONEX_SEED");

  auto* bench_cmd = app.add_subcommand("bench", "walk-length and timing sweep");
  bench_cmd->add_option("--n-min", n_min, "smallest photon count");
  bench_cmd->add_option("--n-max", n_max, "largest photon count");
  bench_cmd->add_option("--theta", theta, "mode-to-photon ratio m/n");
  bench_cmd->add_option("--count", count, "samples per point (0: header only)");
  add_seed(bench_cmd);
  bench_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (haar_cmd->parsed()) return cmd_haar(m, seed, out_path);
    if (sample_cmd->parsed()) {
      return cmd_sample(matrix_path, m, n, count, seed, threads, out_path);
    }
    if (perm_cmd->parsed()) return cmd_perm(matrix_path, pattern, compensated);
    if (pmf_cmd->parsed()) return cmd_pmf(matrix_path, m, n, seed, out_path);
    if (verify_cmd->parsed()) return cmd_verify(suite, vcfg);
    if (bench_cmd->parsed()) {
      return cmd_bench(n_min, n_max, theta, count, seed, out_path);
    }
  } catch (const MatrixParseError& e) {
    std::cerr << "error: malformed matrix file: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
