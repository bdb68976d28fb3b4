#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "yamabe/catalog.hpp"
#include "yamabe/soliton_lab.hpp"

namespace yamabe {

enum class Check { kIdentities, kYamabe, kQuasiYamabe, kClassify, kTorse, kWeyl };

const char* to_string(Check c);
const std::vector<Check>& all_checks();

struct RunConfig {
  std::vector<SurfaceSpec> surfaces;
  int grid_resolution = 5;
  int random_count = 100;
  std::uint64_t seed = 42;
  std::vector<Check> checks = all_checks();
  Tolerances tol;
  std::string output;  // empty: report goes to stdout
};

/// Configuration problem. `line` is 0 when no single line is to blame.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Comma- or space-separated check names; "none" or an empty string gives an
/// empty list, "all" every check. Duplicates are dropped, order follows
/// all_checks(). Throws std::invalid_argument on an unknown name.
std::vector<Check> parse_check_list(const std::string& text);

/// Sectioned key-value text: an optional [run] section and one section per
/// surface. See README for the keys.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

}  // namespace yamabe
