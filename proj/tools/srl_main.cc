#include <iostream>

#include "srl/cli.h"

int main(int argc, char** argv) { return srl::RunCli(argc, argv, std::cout, std::cerr); }
