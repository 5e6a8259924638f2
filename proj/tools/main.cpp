#include "symamp/cli.hpp"

int main(int argc, char** argv) { return symamp::cli::main(argc, argv); }
