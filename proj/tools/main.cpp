#include "commands.hpp"

int main(int argc, char** argv) { return packed::cli::run_cli(argc, argv); }
