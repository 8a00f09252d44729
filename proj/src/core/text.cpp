#include "core/text.hpp"

#include <cctype>

namespace zefav {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && is_space(s[begin])) ++begin;
  while (end > begin && is_space(s[end - 1])) --end;
  return std::string(s.substr(begin, end - begin));
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (char c : s) {
    if (is_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::string normalize_entity(std::string_view surface) {
  std::string s = collapse_whitespace(to_lower_ascii(surface));
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && (is_punct(s[begin]) || is_space(s[begin]))) ++begin;
  while (end > begin && (is_punct(s[end - 1]) || is_space(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '.' || c == '!' || c == '?') && i + 1 < text.size() && is_space(text[i + 1])) {
      std::string sentence = trim(text.substr(start, i + 1 - start));
      if (!sentence.empty()) sentences.push_back(std::move(sentence));
      start = i + 1;
    }
  }
  if (start < text.size()) {
    std::string tail = trim(text.substr(start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
  }
  return sentences;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::size_t rfind_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return std::string_view::npos;
  auto eq = [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
  };
  for (std::size_t pos = haystack.size() - needle.size() + 1; pos-- > 0;) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (!eq(haystack[pos + j], needle[j])) {
        match = false;
        break;
      }
    }
    if (match) return pos;
  }
  return std::string_view::npos;
}

bool contains_word_ci(std::string_view text, std::string_view token) {
  if (token.empty() || token.size() > text.size()) return false;
  auto eq = [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
  };
  for (std::size_t pos = 0; pos + token.size() <= text.size(); ++pos) {
    bool match = true;
    for (std::size_t j = 0; j < token.size(); ++j) {
      if (!eq(text[pos + j], token[j])) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    bool right_ok = pos + token.size() == text.size() || !is_word_char(text[pos + token.size()]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

}  // namespace zefav
