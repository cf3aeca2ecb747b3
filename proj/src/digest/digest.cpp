#include "covcert/digest.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "covcert/error.hpp"

namespace covcert {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::InvariantViolation, "SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::DataMissing, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void verify_against_manifest(const std::string& path, const std::string& manifest_path) {
  std::string name = std::filesystem::path(path).filename().string();
  std::istringstream manifest(read_file(manifest_path));
  std::string line;
  while (std::getline(manifest, line)) {
    std::istringstream fields(line);
    std::string digest, file;
    if (!(fields >> digest >> file)) continue;
    if (!file.empty() && file[0] == '*') file.erase(0, 1);
    if (file != name) continue;
    std::string actual = sha256_hex(read_file(path));
    if (actual != digest) {
      throw Error(Errc::ChecksumMismatch, name + ": expected " + digest + ", got " + actual);
    }
    return;
  }
  throw Error(Errc::ChecksumMismatch, name + " has no entry in " + manifest_path);
}

}  // namespace covcert
