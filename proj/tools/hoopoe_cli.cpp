#include "hoopoe/harness.hpp"

int main(int argc, char** argv) { return hoopoe::harness::cli_main(argc, argv); }
