#include "forage/cli.hpp"

int main(int argc, char** argv) { return forage::run_cli(argc, argv); }
