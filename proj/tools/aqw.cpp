#include "aqw/cli.hpp"

int main(int argc, char** argv) { return aqw::run_cli(argc, argv); }
