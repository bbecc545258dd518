#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbq {

/// Flat key = value configuration with strict validation.
///
/// Grammar: one `key = value` pair per line; `#` starts a comment that runs
/// to end of line; blank lines are ignored.  Keys are [A-Za-z0-9_.-]+.
/// Lists are comma-separated inside a single value.  Parsing and validation
/// collect every problem before reporting so a bad file is diagnosed in one
/// pass.
class Config {
 public:
  static Config parse(const std::string& text) {
    Config cfg;
    std::vector<std::string> errors;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      auto eq = trimmed.find('=');
      if (eq == std::string::npos) {
        errors.push_back("line " + std::to_string(lineno) +
                         ": expected `key = value`, got `" + trimmed + "`");
        continue;
      }
      std::string key = trim(trimmed.substr(0, eq));
      std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty() || !valid_key(key)) {
        errors.push_back("line " + std::to_string(lineno) + ": bad key `" +
                         key + "`");
        continue;
      }
      if (cfg.values_.count(key)) {
        errors.push_back("line " + std::to_string(lineno) + ": duplicate key `" +
                         key + "`");
        continue;
      }
      cfg.values_[key] = value;
    }
    if (!errors.empty()) throw std::invalid_argument(join_errors(errors));
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  /// Reject any key outside the allowed set; report all offenders at once.
  void require_known(const std::vector<std::string>& allowed) const {
    std::vector<std::string> errors;
    for (const auto& [k, v] : values_) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        errors.push_back("unknown key `" + k + "`");
    }
    if (!errors.empty()) throw std::invalid_argument(join_errors(errors));
  }

  std::string get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw std::invalid_argument("missing required key `" + key + "`");
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& dflt) const {
    auto it = values_.find(key);
    return it == values_.end() ? dflt : it->second;
  }

  double get_double(const std::string& key) const {
    return to_double(key, get_string(key));
  }

  double get_double(const std::string& key, double dflt) const {
    auto it = values_.find(key);
    return it == values_.end() ? dflt : to_double(key, it->second);
  }

  long get_int(const std::string& key) const {
    return to_int(key, get_string(key));
  }

  long get_int(const std::string& key, long dflt) const {
    auto it = values_.find(key);
    return it == values_.end() ? dflt : to_int(key, it->second);
  }

  std::vector<double> get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split_list(get_string(key)))
      out.push_back(to_double(key, item));
    return out;
  }

  std::vector<long> get_int_list(const std::string& key) const {
    std::vector<long> out;
    for (const auto& item : split_list(get_string(key)))
      out.push_back(to_int(key, item));
    return out;
  }

  std::vector<std::string> get_string_list(const std::string& key) const {
    return split_list(get_string(key));
  }

  /// Relaxation parameter for one moment: exactly one of `s_<name>` (the
  /// rate) or `sigma_<name>` (its Henon half-shift sigma = 1/s - 1/2) must
  /// be present; returns the rate either way.
  double get_rate(const std::string& moment) const {
    std::string sk = "s_" + moment;
    std::string gk = "sigma_" + moment;
    bool hs = has(sk), hg = has(gk);
    if (hs == hg)
      throw std::invalid_argument("exactly one of `" + sk + "` and `" + gk +
                                  "` must be given");
    if (hs) return get_double(sk);
    double sigma = get_double(gk);
    if (!(sigma > 0.0))
      throw std::invalid_argument("`" + gk + "` must be positive");
    return 1.0 / (sigma + 0.5);
  }

  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

  /// Canonical form: keys sorted, one `key = value` per line.
  std::string serialize() const {
    std::string out;
    for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
    return out;
  }

  /// FNV-1a 64-bit hash of the canonical serialization, as 16 hex digits.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
  }

  const std::map<std::string, std::string>& values() const { return values_; }

  bool operator==(const Config& o) const { return values_ == o.values_; }

 private:
  static std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
  }

  static bool valid_key(const std::string& k) {
    for (char c : k)
      if (!(std::isalnum((unsigned char)c) || c == '_' || c == '.' || c == '-'))
        return false;
    return true;
  }

  static std::string join_errors(const std::vector<std::string>& errors) {
    std::string out = "configuration errors:";
    for (const auto& e : errors) out += "\n  - " + e;
    return out;
  }

  static std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(value);
    while (std::getline(in, cur, ',')) {
      cur = trim(cur);
      if (!cur.empty()) out.push_back(cur);
    }
    return out;
  }

  static double to_double(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      double x = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("");
      return x;
    } catch (...) {
      throw std::invalid_argument("key `" + key + "`: `" + v +
                                  "` is not a number");
    }
  }

  static long to_int(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      long x = std::stol(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("");
      return x;
    } catch (...) {
      throw std::invalid_argument("key `" + key + "`: `" + v +
                                  "` is not an integer");
    }
  }

  std::map<std::string, std::string> values_;
};

}  // namespace lbq
