#include <iostream>

#include "mfao/cli.hpp"

int main(int argc, char** argv) { return mfao::cli::main_entry(argc, argv, std::cout, std::cerr); }
