#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "bk/cli/table.hpp"

namespace bk::cli {

/// File-backed store of command results, one JSON document per
/// (command, parameters). Entries written by another schema or code version
/// are treated as misses.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// $BK_CACHE_DIR, else $XDG_CACHE_HOME/boolean-kerov, else
  /// ~/.cache/boolean-kerov.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const std::string& command, const json& params) const;

  std::optional<json> load(const std::string& command, const json& params) const;
  /// Writes to a temporary file and renames it into place.
  void store(const std::string& command, const json& params, const json& rows) const;

  std::size_t clear() const;
  std::size_t entries() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace bk::cli
