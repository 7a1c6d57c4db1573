#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace topicsig {

// Part of speech, WordNet style: noun, verb, adjective, adverb.
enum class Pos : char { noun = 'n', verb = 'v', adj = 'a', adv = 'r' };

char pos_char(Pos p);
Pos parse_pos(std::string_view s);

// One word sense: lowercase lemma, part of speech, 1-based sense number in
// WordNet order. Renders as "lemma#pos#n" and round-trips through parse.
struct SenseId {
  std::string lemma;
  Pos pos = Pos::noun;
  int sense_no = 1;

  std::string str() const;
  static SenseId parse(std::string_view s);

  friend auto operator<=>(const SenseId&, const SenseId&) = default;
};

// "lemma#pos" key for grouping senses of one word.
std::string lemma_pos_key(std::string_view lemma, Pos pos);

}  // namespace topicsig
