#include <iostream>

#include "burniat/cli.hpp"

int main(int argc, char** argv) { return burniat::run(argc, argv, std::cout, std::cerr); }
