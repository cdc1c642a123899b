#include "chevk1/cli.hpp"

int main(int argc, char **argv) { return chevk1::cli::run(argc, argv); }
