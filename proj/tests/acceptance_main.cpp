// Runs every acceptance criterion and prints one line per criterion.
#include <iostream>

#include "powergraph/acceptance.hpp"

int main() {
  const auto results = powergraph::run_acceptance(&std::cout);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (failed == 0 ? "all " : "") << results.size() - failed << "/" << results.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
