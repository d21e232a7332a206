#include "esch/cli.hpp"

int main(int argc, char** argv) { return esch::run_cli(argc, argv); }
