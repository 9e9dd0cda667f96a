#include <iostream>

#include "autonet/commands.hpp"

int main(int argc, char** argv) { return autonet::cli::run(argc, argv, std::cout, std::cerr); }
