#include "jrepair/config.hpp"

#include <toml.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jrepair {

namespace {

// Flattens nested tables into "a.b.key" entries.
void flatten(const toml::table& table, const std::string& prefix, const std::string& origin,
             std::map<std::string, ConfigValue>& out) {
  for (const auto& [k, node] : table) {
    auto key = prefix.empty() ? std::string(k.str()) : prefix + "." + std::string(k.str());
    auto where = origin + ":" + std::to_string(node.source().begin.line);
    if (auto* t = node.as_table()) {
      flatten(*t, key, origin, out);
    } else if (auto* v = node.as_string()) {
      out[key] = v->get();
    } else if (auto* i = node.as_integer()) {
      out[key] = i->get();
    } else if (auto* b = node.as_boolean()) {
      out[key] = b->get();
    } else if (auto* arr = node.as_array()) {
      std::vector<std::string> items;
      for (const auto& e : *arr) {
        if (!e.is_string()) throw ConfigError(where + ": '" + key + "' must be an array of strings");
        items.push_back(e.as_string()->get());
      }
      out[key] = std::move(items);
    } else {
      throw ConfigError(where + ": unsupported value type for '" + key + "'");
    }
  }
}

}  // namespace

ConfigFile ConfigFile::parse(std::string_view text, const std::string& origin) {
  ConfigFile cfg;
  toml::table table;
  try {
    table = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    throw ConfigError(origin + ":" + std::to_string(e.source().begin.line) + ": " + std::string(e.description()));
  }
  flatten(table, "", origin, cfg.values);
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

template <class T>
static std::optional<T> get_as(const std::map<std::string, ConfigValue>& values, const std::string& key) {
  auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  if (auto* v = std::get_if<T>(&it->second)) return *v;
  throw ConfigError("config key '" + key + "' has the wrong type");
}

std::optional<std::string> ConfigFile::get_string(const std::string& key) const { return get_as<std::string>(values, key); }
std::optional<std::int64_t> ConfigFile::get_int(const std::string& key) const { return get_as<std::int64_t>(values, key); }
std::optional<bool> ConfigFile::get_bool(const std::string& key) const { return get_as<bool>(values, key); }
std::optional<std::vector<std::string>> ConfigFile::get_list(const std::string& key) const {
  return get_as<std::vector<std::string>>(values, key);
}

std::optional<std::filesystem::path> default_config_path() {
  if (const char* env = std::getenv("JREPAIR_CONFIG"); env && *env) return std::filesystem::path(env);
  if (std::filesystem::is_regular_file("jrepair.toml")) return std::filesystem::path("jrepair.toml");
  return std::nullopt;
}

std::shared_ptr<const TypeTable> table_with_config(const ConfigFile& config) {
  auto classes = config.get_list("types.classes");
  auto closeables = config.get_list("types.closeables");
  auto methods = config.get_list("types.methods");
  if (!classes && !closeables && !methods) return TypeTable::builtin();
  auto table = std::make_shared<TypeTable>(*TypeTable::builtin());
  for (const auto& c : classes.value_or(std::vector<std::string>{})) table->add_known_class(c);
  for (const auto& c : closeables.value_or(std::vector<std::string>{})) table->add_closeable(c);
  for (const auto& m : methods.value_or(std::vector<std::string>{})) {
    std::istringstream ms(m);
    std::string owner, name, ret, extra;
    if (!(ms >> owner >> name >> ret) || (ms >> extra))
      throw ConfigError("types.methods entry must be '<owner|*> <method> <return-type>': " + m);
    table->add_method(owner, name, ret);
  }
  return table;
}

}  // namespace jrepair
