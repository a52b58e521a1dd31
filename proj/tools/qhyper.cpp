#include <iostream>

#include "qhyper/cli/commands.hpp"

int main(int argc, char** argv) { return qhyper::cli::run(argc, argv, std::cout, std::cerr); }
