#include "topicsig/stopwords.hpp"

#include <algorithm>
#include <array>

namespace topicsig {

namespace {

// 52 function words, sorted for binary search.
constexpr std::array<std::string_view, 52> kStopwords = {
    "a",    "about", "after", "an",   "and",  "any",  "are",  "as",
    "at",   "be",    "been",  "but",  "by",   "can",  "do",   "for",
    "from", "had",   "has",   "have", "he",   "her",  "his",  "if",
    "in",   "into",  "is",    "it",   "its",  "no",   "nor",  "not",
    "of",   "on",    "one",   "or",   "our",  "she",  "so",   "some",
    "that", "the",   "their", "they", "this", "to",   "was",  "were",
    "which", "who",  "will",  "with",
};

}  // namespace

bool is_stopword(std::string_view lowercased_word) {
  return std::binary_search(kStopwords.begin(), kStopwords.end(),
                            lowercased_word);
}

const std::vector<std::string_view>& stopword_list() {
  static const std::vector<std::string_view> list(kStopwords.begin(),
                                                  kStopwords.end());
  return list;
}

}  // namespace topicsig
