#include "charkit/cli.hpp"

int main(int argc, char** argv) { return charkit::cli::main_entry(argc, argv); }
