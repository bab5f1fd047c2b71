#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "looplab/cli.hpp"
#include "looplab/laurent_loop.hpp"
#include "looplab/rational.hpp"

namespace looplab::cli {

struct Common {
  std::string output;  ///< empty: stdout
  std::string format = "csv";
  std::uint64_t seed = 0;
  int workers = 1;
};

void add_common(CLI::App* sub, Common& c, bool random);

/// Destination stream for one command; owns the file when --output is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback);
  std::ostream& out() { return file_ ? *file_ : fallback_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream& fallback_;
};

/// "# looplab <version> <config json>"
void write_header(std::ostream& os, const std::string& command, const nlohmann::json& config);

/// Shortest round-trip decimal.
std::string num(double v);
std::string num(cplx v, const char* sep = ",");

Rational parse_level(const std::string& text);

struct Command {
  CLI::App* app = nullptr;
  std::function<int(std::ostream& out, std::ostream& err)> run;
};

void register_basic(CLI::App& app, std::vector<Command>& commands, std::ostream& out);
void register_experiments(CLI::App& app, std::vector<Command>& commands, std::ostream& out);

}  // namespace looplab::cli
