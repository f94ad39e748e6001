#include <exception>
#include <iostream>

#include "zss/cli.hpp"

int main(int argc, char** argv) {
    try {
        return zss::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
