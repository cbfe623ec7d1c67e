#include <iostream>
#include <variant>

#include "lgriffiths/cli/cli.hpp"

int main(int argc, char** argv) {
    auto parsed = lgriffiths::cli::parse_args(argc, argv, std::cout, std::cerr);
    if (const int* code = std::get_if<int>(&parsed)) return *code;
    return lgriffiths::cli::run(std::get<lgriffiths::cli::RunConfig>(parsed), std::cout, std::cerr);
}
