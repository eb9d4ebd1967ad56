#include "cli_app.hpp"

int main(int argc, char** argv) { return rhombforge::run_cli(argc, argv); }
