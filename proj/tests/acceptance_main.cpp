#include <iostream>

#include "goka/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : goka::acceptance::run_all()) {
    goka::acceptance::print(std::cout, r);
    std::cout.flush();
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
