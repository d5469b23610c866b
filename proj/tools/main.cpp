#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cpv::cli::run(argc, argv, std::cout, std::cerr); }
