#include "erosion_lab/cli.hpp"

int main(int argc, char** argv) { return elab::cli_main(argc, argv); }
