#include <iostream>

#include "latinrect/cli.hpp"

int main(int argc, char** argv)
{
    return latinrect::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
