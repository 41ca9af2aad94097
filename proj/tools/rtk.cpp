#include "cli.hpp"

int main(int argc, char ** argv) { return rtk::cli::dispatch(argc, argv, std::cout, std::cerr); }
