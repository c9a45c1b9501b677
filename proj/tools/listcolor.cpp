#include <iostream>

#include "listcolor/cli.hpp"

int main(int argc, char** argv) { return listcolor::cli_main(argc, argv, std::cout, std::cerr); }
