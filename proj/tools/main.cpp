#include "cli_app.hpp"

int main(int argc, char** argv) { return goose::cli::run_cli(argc, argv); }
