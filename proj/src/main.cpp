#include "helisphere/cli.hpp"

int main(int argc, char** argv) { return helisphere::cli_main(argc, argv); }
