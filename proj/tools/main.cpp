#include "cohomdet/cli.hpp"

int main(int argc, char** argv) { return cohomdet::cli::run(argc, argv); }
