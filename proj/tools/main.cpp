#include "planemap/cli.hpp"

int main(int argc, char** argv) { return planemap::cli_main(argc, argv); }
