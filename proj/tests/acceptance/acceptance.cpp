#include <iostream>

#include "oksphere/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : oksphere::acceptance_checks()) {
    const char* tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    std::cout << tag << ' ' << r.id << "  " << r.title << ": " << r.detail << '\n';
    if (!r.informational && !r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
