#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace topicsig {

// Splits on whitespace and strips leading/trailing ASCII punctuation from
// each piece. Punctuation inside a token (periods, hyphens, apostrophes, ...)
// is kept, so "anything.com" and "Yo-Yo" survive intact. Case is preserved;
// no normalization of any kind.
std::vector<std::string> tokenize(std::string_view text);

std::string ascii_lower(std::string_view s);

// Collapses internal whitespace runs to single spaces and trims the ends.
std::string normalize_spaces(std::string_view s);

// Splits a multiword phrase on whitespace (no punctuation stripping).
std::vector<std::string> split_words(std::string_view phrase);

}  // namespace topicsig
