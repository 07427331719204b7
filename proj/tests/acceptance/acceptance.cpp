// One line per acceptance criterion. With an argument, runs only that
// criterion and exits non-zero if it fails.
#include <cstdlib>
#include <iostream>

#include "hsgeo/verify.hpp"

int main(int argc, char** argv) {
  using namespace hsgeo;
  int failed = 0;
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  for (int id = 1; id <= kCheckCount; ++id) {
    if (only && id != only) continue;
    auto r = run_check(id);
    print_check(std::cout, r);
    failed += !r.passed;
  }
  return failed ? 1 : 0;
}
