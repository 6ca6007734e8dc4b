#include "powerdom/cli.hpp"

int main(int argc, char** argv) { return powerdom::cli::run_main(argc, argv); }
