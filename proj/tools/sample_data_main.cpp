#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "plutus/synthetic.hpp"

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::cerr << "usage: plutus-sample-data <dir> [seed]\n";
        return 2;
    }
    try {
        const std::uint64_t seed = argc == 3 ? std::stoull(argv[2]) : 1;
        plutus::synthetic::write_sample_dataset(argv[1], seed);
        std::cout << "wrote sample dataset to " << argv[1] << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
