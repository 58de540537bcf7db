#include <iostream>

#include "kh/cli.hpp"

int main(int argc, char** argv) { return kh::run(argc, argv, std::cin, std::cout, std::cerr); }
