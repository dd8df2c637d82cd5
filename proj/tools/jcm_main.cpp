#include "jcm/cli.hpp"

int main(int argc, char** argv) { return jcm::cli::main(argc, argv); }
