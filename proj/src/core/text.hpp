#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zefav {

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Canonical entity form: ASCII-lowercased, whitespace-collapsed, with leading
// and trailing punctuation removed. Idempotent and total; may return an empty
// string when the input has no alphanumeric content.
std::string normalize_entity(std::string_view surface);

// Naive sentence splitter: breaks after '.', '!' or '?' followed by
// whitespace. Returns trimmed, non-empty sentences.
std::vector<std::string> split_sentences(std::string_view text);

bool is_word_char(char c);

// Case-insensitive search for the last occurrence of `needle` in `haystack`.
// Returns npos when absent.
std::size_t rfind_ci(std::string_view haystack, std::string_view needle);

// True when `token` occurs in `text` delimited by non-word characters,
// compared case-insensitively.
bool contains_word_ci(std::string_view text, std::string_view token);

}  // namespace zefav
