#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "acceptance.hpp"

namespace {

std::string capture(const std::string& command, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0) out.append(buffer.data(), n);
  status = pclose(pipe.release());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: s4check_acceptance <path to s4check>\n";
    return 2;
  }
  const std::string exe = argv[1];
  bool all_passed = true;
  for (const auto& r : s4::cli::run_acceptance({})) {
    std::cout << s4::cli::scoreboard_line(r) << "\n" << std::flush;
    all_passed = all_passed && r.passed();
  }

  const std::string command = "'" + exe + "' --all --format json --seed " + std::to_string(s4::kDefaultSeed);
  int first_status = 0, second_status = 0;
  const std::string first = capture(command, first_status);
  const std::string second = capture(command, second_status);
  const bool identical = !first.empty() && first == second;
  std::cout << (identical ? "[PASS]" : "[FAIL]") << " 16 Determinism: two --all runs with seed "
            << s4::kDefaultSeed << " produce " << (identical ? "byte-identical" : "different") << " JSON ("
            << first.size() << " bytes)\n";
  all_passed = all_passed && identical;
  return all_passed ? 0 : 1;
}
