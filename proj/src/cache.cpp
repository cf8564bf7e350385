#include "finloc/cache.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "finloc/errors.hpp"

namespace finloc {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec)
    throw InputError("cannot create cache directory " + dir_.string() + ": " +
                     ec.message());
}

std::string ResultCache::key(std::string_view spec, std::string_view flags) {
  std::string payload(spec);
  payload += '\n';
  payload += flags;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr);
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

fs::path ResultCache::path_for(const std::string &key) const {
  return dir_ / (key + ".json");
}

std::optional<std::string> ResultCache::get(const std::string &key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::put(const std::string &key, std::string_view content) const {
  // Write then rename so concurrent readers never see a partial file.
  auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out)
      return;
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
}

} // namespace finloc
