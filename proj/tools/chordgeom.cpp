#include <iostream>
#include <string>
#include <vector>

#include "chordgeom/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chordgeom::run(args, std::cout, std::cerr);
}
