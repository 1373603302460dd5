#include "coinv/cli.hpp"

int main(int argc, char** argv) { return coinv::cli::main_entry(argc, argv); }
