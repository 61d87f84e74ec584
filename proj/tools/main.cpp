#include "bohm/cli.hpp"

int main(int argc, char** argv) { return bohm::run_cli(argc, argv); }
