#include "pthresh/cli.hpp"

int main(int argc, char** argv) { return pthresh::run_cli(argc, argv); }
