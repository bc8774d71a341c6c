#include <iostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "experiment.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const gals::cli::ParsedArgs parsed = gals::cli::parse_args(args);
    if (parsed.help_requested) {
      std::cout << parsed.help_text;
      return gals::cli::kExitOk;
    }
    return gals::cli::run_experiment(parsed.config, std::cout, std::cerr);
  } catch (const gals::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gals::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gals::cli::kExitUsage;
  }
}
