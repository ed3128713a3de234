#include "idec/config.hpp"

int main(int argc, char** argv) { return idec::run_cli(argc, argv); }
