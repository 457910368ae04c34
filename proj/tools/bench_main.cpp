// Benchmark: the cross-verification batch through the serial reference
// runner versus the OpenMP worker pool, checking along the way that both
// produce identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "charderiv/verify.hpp"

int main(int argc, char** argv) {
  using namespace charderiv;
  VerifyOptions opt;
  opt.cases = (argc > 1) ? std::atoi(argv[1]) : 60;
  opt.seed = (argc > 2) ? static_cast<std::uint64_t>(std::atoll(argv[2])) : 7;

  auto time = [](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return std::make_pair(std::move(result), ms);
  };

  auto [serial, serial_ms] = time([&] { return run_cross_suite_serial(opt); });
  auto [parallel, parallel_ms] = time([&] { return run_cross_suite(opt); });

  bool identical = serial.size() == parallel.size();
  int failures = 0;
  for (size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].name == parallel[i].name && serial[i].pass == parallel[i].pass &&
                serial[i].detail == parallel[i].detail;
    if (!serial[i].pass) ++failures;
  }

  std::cout << "cases:            " << opt.cases << "\n"
            << "serial:           " << serial_ms << " ms\n"
            << "parallel:         " << parallel_ms << " ms (threads=" << verify_thread_count()
            << ")\n"
            << "speedup:          " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n"
            << "results identical: " << (identical ? "yes" : "NO") << "\n"
            << "case failures:     " << failures << "\n";
  return (identical && failures == 0) ? 0 : 1;
}
