#include <iostream>
#include <string>
#include <vector>

#include "morsemap/cli.hpp"

int main(int argc, char** argv) {
  return morsemap::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout,
                                   std::cerr);
}
