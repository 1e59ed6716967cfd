// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsn/model.hpp"

namespace gsn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitVerification = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key/value experiment configuration. Only documented keys are
/// accepted; values are kept as text and parsed on access.
class ExperimentConfig {
 public:
  ExperimentConfig();

  /// Parses `key = value` lines; `#` starts a comment.
  void load_text(const std::string& text, const std::string& origin = "<text>");
  void load_file(const std::string& path);

  /// Applies one `key=value` override.
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool is_set(const std::string& key) const;
  std::string text(const std::string& key) const;
  double real(const std::string& key) const;
  long long integer(const std::string& key) const;
  bool flag(const std::string& key) const;

  NetworkConfig network() const;

  /// Documented keys with their defaults, for --help.
  static const std::vector<std::pair<std::string, std::string>>& documented_keys();

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> explicit_;
};

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsn::cli
