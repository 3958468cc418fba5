#include "cli_app.hpp"

int main(int argc, char** argv) { return twcubic::cli::run(argc, argv); }
