#include <iostream>

#include "interbranch/cli.hpp"

int main(int argc, char** argv)
{
  return interbranch::run_cli(argc, argv, std::cout, std::cerr);
}
