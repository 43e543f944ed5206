#include "tcorr/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return tcorr::cli::run(argc, argv, std::cout, std::cerr);
}
