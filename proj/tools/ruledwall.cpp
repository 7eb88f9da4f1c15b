#include <ruledwall/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = ruledwall::cli::run(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.code;
}
