#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rgdiff {

/// SHA-1 of a byte buffer, lowercase hex. Used for content-addressed caching
/// and run manifests, not for security.
std::string sha1_hex(const void* data, size_t len);
std::string sha1_hex(const std::string& s);
std::string sha1_file_hex(const std::string& path);

}  // namespace rgdiff
