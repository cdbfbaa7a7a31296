#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jrepair/type_hints.hpp"

namespace jrepair {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config values: strings, integers, booleans and arrays of strings.
using ConfigValue = std::variant<std::string, std::int64_t, bool, std::vector<std::string>>;

/// Flat view of a config file; keys are "section.key" (or "key" at top level).
struct ConfigFile {
  std::map<std::string, ConfigValue> values;

  static ConfigFile parse(std::string_view text, const std::string& origin = "config");
  static ConfigFile load(const std::filesystem::path& path);

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<std::int64_t> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_list(const std::string& key) const;
};

/// Config path: $JREPAIR_CONFIG when set, else ./jrepair.toml when present.
std::optional<std::filesystem::path> default_config_path();

/// Builtin JDK table extended by [types] classes / closeables / methods.
std::shared_ptr<const TypeTable> table_with_config(const ConfigFile& config);

}  // namespace jrepair
