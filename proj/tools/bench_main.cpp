// Benchmark comparing the OpenMP kernels against their serial references:
// the square-zero box enumeration and the per-cone determinant sweep of
// fan validation. Results are checked for exact agreement while timing.

#include "toricskt/bott.hpp"
#include "toricskt/cohomology.hpp"
#include "toricskt/fan.hpp"
#include "toricskt/search.hpp"
#include "toricskt/skt.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace toricskt;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BottSpec random_spec(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BottSpec spec;
  spec.k = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      spec.c[{i, j}] = static_cast<std::int64_t>(rng() % 11) - 5;
  return spec;
}

void bench_search(int k, std::int64_t bound, std::uint64_t seed) {
  BottSpec spec = random_spec(k, seed);
  Fan fan = build_bott(spec);
  Cohomology ring = compute_cohomology(fan);

  GramForm form;
  form.vars = ring.h2.rank;
  form.out_dim = ring.h4.rank;
  for (int t = 0; t < form.vars; ++t) {
    for (int s = t; s < form.vars; ++s) {
      CohomologyClass ct(ring.m(), Int(0)), cs(ring.m(), Int(0));
      ct[ring.h2.q.basis_cols[t]] = 1;
      cs[ring.h2.q.basis_cols[s]] = 1;
      form.gram.push_back(product(ring, ct, cs));
    }
  }

  std::cout << "square-zero enumeration: k=" << k << " bound=" << bound << " box=(2b+1)^"
            << form.vars << "\n";

  auto t0 = std::chrono::steady_clock::now();
  auto serial = enumerate_square_zero_serial(form, bound);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel = enumerate_square_zero_parallel(form, bound);
  double parallel_s = seconds_since(t0);

  if (serial != parallel) {
    std::cout << "  MISMATCH between serial and parallel results\n";
    std::exit(1);
  }
  std::cout << "  hits=" << serial.size() << "  serial=" << serial_s << "s  parallel="
            << parallel_s << "s  speedup=" << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
            << "\n";
}

void bench_validate(int k, std::uint64_t seed) {
  BottSpec spec = random_spec(k, seed);
  Fan fan = build_bott(spec);
  std::cout << "fan validation: k=" << k << " cones=" << fan.max_cones.size() << "\n";

  auto t0 = std::chrono::steady_clock::now();
  ValidationReport serial = validate_fan_serial(fan);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  ValidationReport parallel = validate_fan(fan);
  double parallel_s = seconds_since(t0);

  if (serial.ok() != parallel.ok() || serial.failures.size() != parallel.failures.size()) {
    std::cout << "  MISMATCH between serial and parallel reports\n";
    std::exit(1);
  }
  std::cout << "  valid=" << (serial.ok() ? "yes" : "no") << "  serial=" << serial_s
            << "s  parallel=" << parallel_s << "s  speedup="
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int search_k = 5;
  std::int64_t bound = 12;
  int validate_k = 14;
  std::uint64_t seed = 20240801;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&](const char* name) {
      if (i + 1 >= argc) {
        std::cerr << name << " needs a value\n";
        std::exit(2);
      }
      return std::string(argv[++i]);
    };
    if (arg == "--search-k") search_k = std::stoi(next("--search-k"));
    else if (arg == "--bound") bound = std::stoll(next("--bound"));
    else if (arg == "--validate-k") validate_k = std::stoi(next("--validate-k"));
    else if (arg == "--seed") seed = std::stoull(next("--seed"));
    else if (arg == "--help") {
      std::cout << "usage: sktcert-bench [--search-k K] [--bound B] [--validate-k K] [--seed S]\n";
      return 0;
    }
  }

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  bench_search(search_k, bound, seed);
  bench_validate(validate_k, seed + 1);
  return 0;
}
