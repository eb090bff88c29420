#include "cli.hpp"

int main(int argc, char** argv) { return mgof::cli::run_cli(argc, argv); }
