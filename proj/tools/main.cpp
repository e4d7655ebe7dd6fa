#include <iostream>

#include "kstab/cli.h"

int main(int argc, char** argv) { return kstab::run_cli(argc, argv, std::cout, std::cerr); }
