#include "xdg/cli.hpp"

int main(int argc, char** argv) { return xdg::cli_main(argc, argv); }
