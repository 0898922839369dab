#include "wit/cli.hpp"

int main(int argc, char** argv) { return wit::cli::run(argc, argv); }
