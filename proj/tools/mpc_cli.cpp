#include "mpc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mpc::run_cli(argc, argv, std::cout, std::cerr);
}
