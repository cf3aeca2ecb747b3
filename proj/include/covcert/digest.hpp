#pragma once

#include <string>
#include <string_view>

namespace covcert {

/// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

/// Reads a whole file; throws DataMissing if it cannot be opened.
std::string read_file(const std::string& path);

/// Checks `path` against a sha256sum-style manifest ("<hex>  <name>") in the
/// same directory. Throws ChecksumMismatch on a mismatch or a missing entry.
void verify_against_manifest(const std::string& path, const std::string& manifest_path);

}  // namespace covcert
