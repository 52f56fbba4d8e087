#include <cstdlib>
#include <exception>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* seed = std::getenv("DETARR_SEED");
  try {
    return detarr::cli::run(args, std::cout, std::cerr, seed ? seed : "");
  } catch (const std::exception& e) {
    std::cerr << "detarr: internal error: " << e.what() << "\n";
    return 1;
  }
}
