#include "wsn/cli.hpp"

int main(int argc, char** argv) { return wsn::cli_main(argc, argv); }
