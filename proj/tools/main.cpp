#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    brt::cli::RunConfig config;
    if (auto code = brt::cli::parse_args(argc, argv, config, std::cout, std::cerr))
        return *code;
    return brt::cli::run(config, std::cout, std::cerr);
}
