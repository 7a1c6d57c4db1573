#include "topicsig/text.hpp"

#include <cctype>

namespace topicsig {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < n && !is_space(text[j])) ++j;
    if (j > i) {
      std::size_t b = i, e = j;
      while (b < e && is_punct(text[b])) ++b;
      while (e > b && is_punct(text[e - 1])) --e;
      if (e > b) out.emplace_back(text.substr(b, e - b));
    }
    i = j;
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string normalize_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // trims leading space
  for (char c : s) {
    if (is_space(c)) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out.push_back(' ');
      in_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split_words(std::string_view phrase) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = phrase.size();
  while (i < n) {
    while (i < n && is_space(phrase[i])) ++i;
    std::size_t j = i;
    while (j < n && !is_space(phrase[j])) ++j;
    if (j > i) out.emplace_back(phrase.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace topicsig
