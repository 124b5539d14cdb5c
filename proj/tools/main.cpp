#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  varpi::cli::CliConfig config;
  if (auto status = varpi::cli::parse(argc, argv, config, std::cout, std::cerr)) return *status;
  return varpi::cli::run(std::move(config), std::cout, std::cerr);
}
