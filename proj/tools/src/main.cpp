#include <iostream>
#include <string>
#include <vector>

#include "lambday/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 1 && args[0] == "repl") {
    return lambday::cli::repl(std::cin, std::cout, std::cerr, true);
  }
  return lambday::cli::run(args, std::cout, std::cerr);
}
