#include "qmat/cli.hpp"

int main(int argc, char** argv) { return qmat::run_cli_main(argc, argv); }
