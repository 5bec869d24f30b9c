// Replays every tests/golden/*.args through the CLI and compares standard
// output byte for byte with the sibling .json file. Pass --update to rewrite
// the expected files instead.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "kleinvcy/cli.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_runner DIR [--update]\n";
    return 2;
  }
  const fs::path dir = argv[1];
  const bool update = argc > 2 && std::string(argv[2]) == "--update";
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  }
  std::sort(cases.begin(), cases.end());
  if (cases.empty()) {
    std::cerr << "no golden cases in " << dir << '\n';
    return 1;
  }
  int failed = 0;
  for (const auto& args_file : cases) {
    std::ostringstream out, err;
    const int code = kleinvcy::cli::run(words(slurp(args_file)), out, err);
    fs::path expected = args_file;
    expected.replace_extension(".json");
    if (update) {
      std::ofstream(expected, std::ios::binary) << out.str();
      continue;
    }
    const bool ok = code == 0 && out.str() == slurp(expected);
    std::cout << (ok ? "PASS " : "FAIL ") << args_file.stem().string() << '\n';
    if (!ok) {
      ++failed;
      std::cout << "--- expected\n" << slurp(expected) << "--- actual (exit " << code << ")\n" << out.str() << err.str();
    }
  }
  std::cout << cases.size() - failed << "/" << cases.size() << " golden cases match\n";
  return failed == 0 ? 0 : 1;
}
