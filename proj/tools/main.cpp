#include "cli.hpp"

int main(int argc, char** argv) { return modalg::cli::main_entry(argc, argv); }
