#ifndef FINLOC_CACHE_HPP
#define FINLOC_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace finloc {

/// Flat directory of JSON results keyed by a content hash.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  /// Hex SHA-256 of the canonical spec and the command flags.
  static std::string key(std::string_view canonical_spec, std::string_view flags);

  std::optional<std::string> get(const std::string &key) const;
  void put(const std::string &key, std::string_view content) const;

  const std::filesystem::path &dir() const { return dir_; }

private:
  std::filesystem::path path_for(const std::string &key) const;

  std::filesystem::path dir_;
};

} // namespace finloc

#endif
