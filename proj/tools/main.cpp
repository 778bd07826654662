#include <iostream>

#include "faqai/cli.hpp"

int main(int argc, char **argv) { return faqai::cli::run(argc, argv, std::cout, std::cerr); }
