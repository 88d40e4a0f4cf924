#include <iostream>

#include "ktype/cli.hpp"

int main(int argc, char** argv) { return ktype::cli::run(argc, argv, std::cout, std::cerr); }
