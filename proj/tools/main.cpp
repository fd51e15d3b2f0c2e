#include "edgemon/cli.hpp"

int main(int argc, char** argv) { return edgemon::cli::run(argc, argv); }
