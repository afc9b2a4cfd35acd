#include <iostream>

#include "qmn_cli.hpp"

int main(int argc, char** argv) {
    return qmn::cli::run_cli(argc, argv, std::cout, std::cerr);
}
