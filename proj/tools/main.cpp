#include "cli.hpp"

int main(int argc, char** argv) { return symdyn::cli::run(argc, argv); }
