// Runs the installed executable for every golden case and compares stdout
// with tests/golden/<name>.txt. With --update, rewrites the files instead.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "xoverlab/cli.hpp"

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

bool run_process(const std::string& command, std::string& output) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  return pclose(pipe) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_check XOVERLAB GOLDEN_DIR [--update]\n";
    return 2;
  }
  const std::string exe = argv[1];
  const std::filesystem::path dir = argv[2];
  const bool update = argc > 3 && std::string(argv[3]) == "--update";

  int failures = 0;
  for (const auto& c : xoverlab::golden_cases()) {
    std::string command = quote(exe);
    for (const auto& a : c.args) command += " " + quote(a);
    std::string first, second;
    if (!run_process(command, first) || !run_process(command, second)) {
      std::cout << "FAIL " << c.name << ": nonzero exit\n";
      ++failures;
      continue;
    }
    const auto path = dir / (c.name + ".txt");
    if (update) {
      std::ofstream(path, std::ios::binary) << first;
      std::cout << "wrote " << path.string() << '\n';
      continue;
    }
    std::ifstream file(path, std::ios::binary);
    std::ostringstream expected;
    expected << file.rdbuf();
    const bool ok = file.good() && first == second && first == expected.str();
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << '\n';
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
