#include <iostream>

#include "strictcat/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& criterion : strictcat::acceptance::criteria()) {
    const auto r = criterion();
    std::cout << r.line() << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 9 - failed << "/9 criteria)"
            << std::endl;
  return failed ? 1 : 0;
}
