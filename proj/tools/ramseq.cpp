#include <iostream>

#include "ramseq/commands.hpp"

int main(int argc, char** argv) { return ramseq::cli::run(argc, argv, std::cout, std::cerr); }
