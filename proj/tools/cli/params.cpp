#include "cli/params.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qhe::cli {

Params& Params::declare(const std::string& key, const std::string& default_value) {
  if (!values_.count(key)) order_.push_back(key);
  values_[key] = default_value;
  return *this;
}

Params& Params::declare(const std::string& key, double default_value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, default_value);
  return declare(key, std::string(buf, res.ptr));
}

void Params::apply(const std::map<std::string, std::string>& overrides) {
  for (const auto& [k, v] : overrides) {
    auto it = values_.find(k);
    if (it == values_.end()) throw InvalidParameter("unknown parameter '" + k + "'");
    it->second = v;
  }
}

double Params::number(const std::string& key) const {
  const std::string& s = text(key);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(x)) {
    throw InvalidParameter("parameter '" + key + "' is not a finite number: '" + s + "'");
  }
  return x;
}

int Params::integer(const std::string& key) const {
  const double x = number(key);
  if (x != std::floor(x) || std::fabs(x) > 1e9) {
    throw InvalidParameter("parameter '" + key + "' must be an integer");
  }
  return static_cast<int>(x);
}

const std::string& Params::text(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InvalidParameter("undeclared parameter '" + key + "'");
  return it->second;
}

std::vector<std::pair<std::string, std::string>> Params::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : order_) out.emplace_back(k, values_.at(k));
  return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw InvalidParameter("expected key=value, got '" + kv + "'");
  }
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

}  // namespace qhe::cli
