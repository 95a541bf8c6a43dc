// Runs every acceptance criterion and prints one line per criterion.
// Arguments filter by criterion id or tag, as in `nonrep suite run --only`.

#include <iostream>
#include <string>
#include <vector>

#include "nonrep/suite.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> only(argv + 1, argv + argc);
  const auto results = nonrep::run_suite(only, [](const nonrep::CriterionResult& r) {
    std::cout << nonrep::format_result_line(r) << std::endl;
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() && !results.empty() ? 0 : 1;
}
