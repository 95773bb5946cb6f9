#include "levy/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return levy::cli::run(argc, argv, std::cout, std::cerr);
}
