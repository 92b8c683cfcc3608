#include <iostream>

#include "alder/cli.hpp"

int main(int argc, char **argv)
{
    return alder::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
