#include <iostream>

#include "nis/cli.hpp"

int main(int argc, char** argv) { return nis::run_command_line(argc, argv, std::cout, std::cerr); }
