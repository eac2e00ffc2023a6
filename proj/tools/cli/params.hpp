#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhe/errors.hpp"

namespace qhe::cli {

/// Command parameters with defaults. Overrides for keys that were not
/// declared are rejected.
class Params {
 public:
  Params& declare(const std::string& key, const std::string& default_value);
  Params& declare(const std::string& key, double default_value);

  /// Throws InvalidParameter on unknown keys.
  void apply(const std::map<std::string, std::string>& overrides);

  double number(const std::string& key) const;
  int integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;

  /// Every parameter as (key, value), in declaration order.
  std::vector<std::pair<std::string, std::string>> resolved() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::string> values_;
};

/// Parses "key=value".
std::pair<std::string, std::string> split_assignment(const std::string& kv);

}  // namespace qhe::cli
