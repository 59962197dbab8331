#include "qgw/cli.hpp"

int main(int argc, char** argv) { return qgw::run_cli(argc, argv); }
