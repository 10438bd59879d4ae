#include "gpd/cli.hpp"

int main(int argc, char** argv) { return gpd::cli_main(argc, argv); }
