#include "blockrec/harness.hpp"

int main(int argc, char** argv) { return blockrec::cli_main(argc, argv); }
