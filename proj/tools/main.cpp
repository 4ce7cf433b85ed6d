#include <iostream>

#include "dyck/cli.hpp"

int main(int argc, char** argv) { return dyck::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
