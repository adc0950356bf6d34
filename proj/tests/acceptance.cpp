// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "xoverlab/verify.hpp"

int main(int argc, char** argv) {
  xoverlab::VerifyOptions options;
  options.golden_dir = argc > 1 ? argv[1] : XOVER_GOLDEN_DIR;

  int failed = 0;
  int index = 0;
  for (const auto& name : xoverlab::suite_names()) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = xoverlab::run_suite(name, options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    ++index;
    std::cout << (report.passed() ? "PASS " : "FAIL ") << std::setw(2) << index << ' '
              << std::left << std::setw(13) << name << std::right << report.criteria.size()
              << " checks, " << std::fixed << std::setprecision(1) << elapsed.count() << "s\n";
    for (const auto& c : report.criteria) {
      if (!c.passed) std::cout << "     failed: " << c.name << ": " << c.detail << '\n';
    }
    for (const auto& note : report.notes) std::cout << "     note: " << note << '\n';
    failed += !report.passed();
  }
  std::cout << (failed == 0 ? "all criteria passed" : "some criteria FAILED") << '\n';
  return failed == 0 ? 0 : 1;
}
