#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "centrafactor/error.hpp"
#include "centrafactor/generate.hpp"

namespace centrafactor {

/// One corpus entry: an edge-list file or a generator invocation.
struct Source {
  std::string name;
  std::variant<std::filesystem::path, GeneratorSpec> origin;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw ConfigError("invalid value '" + text + "' for " + what);
  return value;
}

}  // namespace detail

/// Parses `<model>:<key=value,...>:<seed>` (the part after `gen:`), e.g.
/// `random:n=100,p=0.05:7`, `scale-free:n=200,m=2:1`,
/// `small-world:n=100,k=4,beta=0.1:3`. The seed may be omitted, in which
/// case `default_seed` is used.
inline GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t default_seed = 1) {
  const auto parts = detail::split(text, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw ConfigError("generator spec must look like <model>:<params>[:<seed>], got '" + text + "'");
  std::map<std::string, std::string> params;
  for (const auto& kv : detail::split(parts[1], ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("generator parameter '" + kv + "' is not key=value");
    params[detail::trim(kv.substr(0, eq))] = detail::trim(kv.substr(eq + 1));
  }
  auto take = [&](const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw ConfigError("generator '" + parts[0] + "' needs parameter '" + key + "'");
    std::string v = it->second;
    params.erase(it);
    return v;
  };

  GeneratorSpec spec;
  spec.seed = parts.size() == 3 ? detail::parse_number<std::uint64_t>(parts[2], "seed") : default_seed;
  const std::string& model = parts[0];
  if (model == "random") {
    spec.model = RandomModel{detail::parse_number<std::size_t>(take("n"), "n"),
                             detail::parse_number<double>(take("p"), "p")};
  } else if (model == "scale-free") {
    spec.model = ScaleFreeModel{detail::parse_number<std::size_t>(take("n"), "n"),
                                detail::parse_number<std::size_t>(take("m"), "m")};
  } else if (model == "small-world") {
    spec.model = SmallWorldModel{detail::parse_number<std::size_t>(take("n"), "n"),
                                 detail::parse_number<std::size_t>(take("k"), "k"),
                                 detail::parse_number<double>(take("beta"), "beta")};
  } else {
    throw ConfigError("unknown generator model '" + model + "'");
  }
  if (!params.empty()) throw ConfigError("unknown generator parameter '" + params.begin()->first + "'");
  validate(spec);
  return spec;
}

/// One source per line: a path (relative paths resolve against `base_dir`)
/// or `gen:<model>:<params>:<seed>`. Blank lines and `#` comments are skipped.
inline std::vector<Source> parse_manifest(std::istream& in, const std::filesystem::path& base_dir = {},
                                          std::uint64_t default_seed = 1) {
  std::vector<Source> sources;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("gen:")) {
      try {
        sources.push_back({line, parse_generator_spec(line.substr(4), default_seed)});
      } catch (const ConfigError& e) {
        throw ConfigError("manifest line " + std::to_string(line_no) + ": " + e.what());
      }
    } else {
      std::filesystem::path p(line);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      sources.push_back({line, p});
    }
  }
  return sources;
}

inline std::vector<Source> load_manifest(const std::filesystem::path& path, std::uint64_t default_seed = 1) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path.string() + "'");
  return parse_manifest(in, path.parent_path(), default_seed);
}

}  // namespace centrafactor
