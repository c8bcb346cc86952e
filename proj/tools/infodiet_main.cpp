#include "infodiet/cli.hpp"

int main(int argc, char** argv) { return infodiet::run_cli(argc, argv); }
