#include "rcrae/harness.hpp"

int main(int argc, char** argv) { return rcrae::cli_main(argc, argv); }
