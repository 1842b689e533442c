#include "subdamp/cli.hpp"

int main(int argc, char** argv) { return subdamp::run_cli(argc, argv); }
