#include "reciperec/config.hpp"

#include <sstream>
#include <stdexcept>

#include "reciperec/io.hpp"

namespace reciperec {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  RunConfig cfg;
  std::size_t lineno = 0;
  for (const std::string& raw : io::read_lines(path)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    cfg.entries_[key] = value;
  }
  return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) { entries_[key] = value; }

void RunConfig::apply_override(std::string_view kv) {
  std::size_t eq = kv.find('=');
  if (eq == std::string_view::npos)
    throw std::runtime_error("override must be key=value, got: " + std::string(kv));
  set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

bool RunConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string RunConfig::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw std::runtime_error("missing config key: " + key);
  return it->second;
}

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + " is not a number: " + it->second);
  }
}

std::int64_t RunConfig::get_int(const std::string& key, std::int64_t fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + " is not an integer: " + it->second);
  }
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::runtime_error("config key " + key + " is not a boolean: " + v);
}

std::vector<std::string> RunConfig::get_list(const std::string& key,
                                             const std::vector<std::string>& fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<std::string> out;
  std::stringstream ss(it->second);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    piece = trim(piece);
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

std::map<std::string, std::string> RunConfig::with_prefix(const std::string& prefix) const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : entries_) {
    if (k.size() > prefix.size() && k.compare(0, prefix.size(), prefix) == 0)
      out[k.substr(prefix.size())] = v;
  }
  return out;
}

void RunConfig::validate_keys(const std::vector<std::string>& allowed_exact,
                              const std::vector<std::string>& allowed_prefixes) const {
  std::vector<std::string> bad;
  for (const auto& [k, v] : entries_) {
    bool ok = false;
    for (const std::string& a : allowed_exact)
      if (k == a) {
        ok = true;
        break;
      }
    for (const std::string& p : allowed_prefixes)
      if (!ok && k.size() > p.size() && k.compare(0, p.size(), p) == 0) {
        ok = true;
        break;
      }
    if (!ok) bad.push_back(k);
  }
  if (!bad.empty()) {
    std::string msg = "unknown config keys:";
    for (const std::string& k : bad) msg += " " + k;
    throw std::runtime_error(msg);
  }
}

}  // namespace reciperec
