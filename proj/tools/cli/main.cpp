#include <cstdio>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      std::fputs(sircli::usage_text().c_str(), stdout);
      return 0;
    }
    if (a == "--version") {
      std::printf("sirchaos %s\n", sir_version());
      return 0;
    }
  }

  try {
    const sircli::RunConfig cfg = sircli::parse_config(args);
    sircli::run_command(cfg);
    return 0;
  } catch (const sircli::UsageError& e) {
    std::fprintf(stderr, "error: %s\n\n%s", e.what(),
                 sircli::usage_text().c_str());
    return 1;
  } catch (const sircli::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const sircli::NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const sircli::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
