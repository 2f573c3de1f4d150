#ifndef PHOTOEFFECT_CLI_MANIFEST_HPP
#define PHOTOEFFECT_CLI_MANIFEST_HPP

#include <chrono>
#include <cstdint>
#include <ctime>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace photoeffect::cli
{

inline constexpr std::string_view tool_version = "0.1.0";

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 14695981039346656037ull)
{
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string utc_timestamp()
{
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Record of one invocation.  The timestamp lives here only, never in the
/// data outputs, so that outputs stay byte-identical across reruns.
struct RunManifest
{
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string config_text; // contents of --config, hashed with the parameters
  std::string timestamp;
  std::vector<std::string> outputs;
  double runtime_seconds = 0.0;

  std::string config_hash() const
  {
    std::uint64_t h = fnv1a(subcommand);
    for (const auto& [k, v] : parameters) {
      h = fnv1a(k, h);
      h = fnv1a("=", h);
      h = fnv1a(v, h);
      h = fnv1a("\n", h);
    }
    h = fnv1a(config_text, h);
    return fmt::format("{:016x}", h);
  }

  nlohmann::ordered_json to_json() const
  {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) {
      params[k] = v;
    }
    j["parameters"] = params;
    j["config_hash"] = config_hash();
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    j["runtime_seconds"] = runtime_seconds;
    j["outputs"] = outputs;
    return j;
  }
};

} // namespace photoeffect::cli

#endif
