#include <iostream>

#include "routehobo/cli.hpp"

int main(int argc, char** argv) { return routehobo::cli_main(argc, argv, std::cout, std::cerr); }
