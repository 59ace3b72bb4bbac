#include <iostream>

#include "lgkkp/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return lgkkp::run_cli(args, std::cout, std::cerr);
}
