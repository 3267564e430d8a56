#pragma once

// key = value config files shared by the CLI subcommands. Lines are
// `key = value`, '#' starts a comment. Every key must be consumed by the
// run; leftovers are an error (catches typos in experiment configs).

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "acx/core/point.hpp"

namespace acx {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  Config() = default;
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text);

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  bool has(const std::string& key) const { return kv_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key, double fallback);
  long long get_int(const std::string& key, long long fallback);
  // comma-separated doubles
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback);
  Point get_point(const std::string& key, Point fallback);

  // throws ConfigError when any key was never read
  void check_consumed() const;

  // deterministic "key = value" dump of everything (resolved config echo)
  std::string resolved(const std::string& extra = "") const;

 private:
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> consumed_;
};

}  // namespace acx
