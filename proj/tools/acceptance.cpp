// Prints one line per acceptance criterion; exit status 1 if any fails.
#include "acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const bool color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  int failed = 0;
  for (const auto& r : wcm::app::runAcceptance(filter)) {
    std::cout << wcm::app::formatResult(r, color) << std::endl;
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
