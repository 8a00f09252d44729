#pragma once

#include <string>
#include <string_view>

namespace zefav {

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

// SHA-256 of a file's contents. Throws Error{Io} when unreadable.
std::string sha256_file_hex(const std::string& path);

bool is_hex_digest(std::string_view s);

}  // namespace zefav
