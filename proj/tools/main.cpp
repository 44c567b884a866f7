#include "cli.hpp"

int main(int argc, char** argv) { return emg::cli::main(argc, argv); }
