#include <iostream>

#include "chainmdp/cli.hpp"

int main(int argc, char** argv) {
    return chainmdp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
