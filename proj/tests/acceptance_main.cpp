#include <iostream>

#include "bpskalc/acceptance.hpp"

int main() {
  int failed = bpsk::acceptance::run_acceptance(std::cout);
  if (failed > 0)
    std::cout << failed << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failed > 0 ? 1 : 0;
}
