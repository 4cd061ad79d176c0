#include "cantor/cli.hpp"

int main(int argc, char** argv) { return cantor::run_cli(argc, argv); }
