#include "raagtk/cli.hpp"

int main(int argc, char** argv) { return raagtk::cli::run(argc, argv); }
