#include "relcheb/cli.hpp"

int main(int argc, char** argv) { return relcheb::run(argc, argv); }
