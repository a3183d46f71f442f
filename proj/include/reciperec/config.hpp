#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reciperec {

// Flat key-value run configuration. File syntax is one `key = value` pair
// per line, '#' starts a comment. Keys are validated against the prefixes a
// command registers, so typos fail loudly instead of being ignored.
class RunConfig {
 public:
  RunConfig() = default;

  static RunConfig from_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
  void apply_override(std::string_view key_equals_value);  // "key=value"

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws when missing
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::string> get_list(const std::string& key,
                                    const std::vector<std::string>& fallback) const;  // comma split

  // All keys sharing a prefix, e.g. weights.* -> {type -> value}.
  std::map<std::string, std::string> with_prefix(const std::string& prefix) const;

  // Throws listing the offending keys when any key matches none of the
  // allowed exact names or `prefix.` groups.
  void validate_keys(const std::vector<std::string>& allowed_exact,
                     const std::vector<std::string>& allowed_prefixes) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace reciperec
