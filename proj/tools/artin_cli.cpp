#include "cli.hpp"

int main(int argc, char** argv) { return artin::cli::main_entry(argc, argv); }
