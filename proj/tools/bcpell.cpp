#include <iostream>
#include <string>
#include <vector>

#include "bcpell/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return bcpell::run_cli(args, std::cout, std::cerr);
}
