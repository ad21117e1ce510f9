#include "holevo/cli.hpp"

int main(int argc, char** argv) { return holevo::run_cli(argc, argv); }
