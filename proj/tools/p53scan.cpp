#include "p53scan/cli.hpp"

int main(int argc, char** argv) { return p53scan::cli::run(argc, argv); }
