#include "metaplectic/cli.hpp"

int main(int argc, char** argv) { return meta::cli::run(argc, argv); }
