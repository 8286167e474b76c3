#include "kneserlab/cli.hpp"

int main(int argc, char** argv) { return kneserlab::cli::run(argc, argv); }
