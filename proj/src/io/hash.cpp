#include "lcaes/io/hash.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <memory>

#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"

namespace lcaes::io {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw IoError("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string hash_files(const std::string& dir, const std::vector<std::string>& names) {
  std::string buf;
  for (const auto& name : names) {
    const auto path = std::filesystem::path(dir) / name;
    buf += name;
    buf += '\0';
    if (std::filesystem::exists(path)) {
      const std::string content = read_text(path.string());
      buf += std::to_string(content.size());
      buf += '\0';
      buf += content;
    } else {
      buf += "missing";
    }
    buf += '\0';
  }
  return sha256_hex(buf);
}

}  // namespace lcaes::io
