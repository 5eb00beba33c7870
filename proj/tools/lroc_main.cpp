#include <iostream>

#include "lroc_cli/app.hpp"

int main(int argc, char** argv) { return lroc::cli::run(argc, argv, std::cout, std::cerr); }
