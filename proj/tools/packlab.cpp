#include "packlab/cli.hpp"

int main(int argc, char** argv) { return packlab::run_cli(argc, argv); }
