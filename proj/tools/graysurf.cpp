#include "graysurf/cli.hpp"

int main(int argc, char** argv) { return graysurf::cli::run(argc, argv); }
