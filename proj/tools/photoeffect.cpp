#include <iostream>

#include "photoeffect/cli/app.hpp"

int main(int argc, char** argv)
{
  return photoeffect::cli::run(argc, argv, std::cout, std::cerr);
}
