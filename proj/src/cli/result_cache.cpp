#include "bk/cli/result_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

namespace bk::cli {

namespace fs = std::filesystem;

namespace {

// 64-bit FNV-1a: stable across runs and platforms, unlike std::hash.
std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

}  // namespace

fs::path ResultCache::default_directory() {
  if (const char* d = env("BK_CACHE_DIR")) return d;
  if (const char* x = env("XDG_CACHE_HOME")) return fs::path(x) / "boolean-kerov";
  if (const char* home = env("HOME")) return fs::path(home) / ".cache" / "boolean-kerov";
  return fs::temp_directory_path() / "boolean-kerov";
}

fs::path ResultCache::entry_path(const std::string& command, const json& params) const {
  const std::string key = command + "|" + params.dump() + "|" + std::to_string(kSchemaVersion) + "|" + kCodeVersion;
  return dir_ / (command + "-" + fnv1a_hex(key) + ".json");
}

std::optional<json> ResultCache::load(const std::string& command, const json& params) const {
  std::ifstream in(entry_path(command, params));
  if (!in) return std::nullopt;
  const json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("schema_version", -1) != kSchemaVersion || doc.value("code_version", "") != kCodeVersion) {
    return std::nullopt;
  }
  if (doc.value("command", "") != command || doc.value("params", json()) != params || !doc.contains("rows")) {
    return std::nullopt;
  }
  return doc.at("rows");
}

void ResultCache::store(const std::string& command, const json& params, const json& rows) const {
  fs::create_directories(dir_);
  const json doc{{"schema_version", kSchemaVersion},
                 {"code_version", kCodeVersion},
                 {"command", command},
                 {"params", params},
                 {"rows", rows}};
  const fs::path target = entry_path(command, params);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::random_device{}();
  const fs::path tmp = target.string() + suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::size_t ResultCache::clear() const {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() == ".json") removed += fs::remove(e.path()) ? 1 : 0;
  }
  return removed;
}

std::size_t ResultCache::entries() const {
  std::size_t n = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) n += e.path().extension() == ".json" ? 1 : 0;
  return n;
}

}  // namespace bk::cli
