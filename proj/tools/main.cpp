#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  // Logs go to stderr; stdout carries command output.
  spdlog::set_default_logger(spdlog::stderr_color_mt("trochoid"));
  spdlog::set_level(spdlog::level::info);
  if (const char* level = std::getenv("TROCHOID_MILL_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return trochoid::cli::run(args, std::cout, std::cerr);
}
