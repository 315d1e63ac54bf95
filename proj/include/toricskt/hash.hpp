#pragma once

#include <string>

namespace toricskt {

// Lowercase hex SHA-256 digest; used to content-address canonical fan JSON.
std::string sha256_hex(const std::string& bytes);

}  // namespace toricskt
