#include "topicsig/sense.hpp"

#include <cctype>

#include "topicsig/errors.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

char pos_char(Pos p) { return static_cast<char>(p); }

Pos parse_pos(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'n': return Pos::noun;
      case 'v': return Pos::verb;
      case 'a': return Pos::adj;
      case 'r': return Pos::adv;
    }
  }
  throw format_error("invalid part-of-speech tag: '" + std::string(s) +
                     "' (expected one of n, v, a, r)");
}

std::string SenseId::str() const {
  return lemma + "#" + pos_char(pos) + "#" + std::to_string(sense_no);
}

SenseId SenseId::parse(std::string_view s) {
  const auto h1 = s.find('#');
  const auto h2 = s.rfind('#');
  if (h1 == std::string_view::npos || h2 == h1)
    throw format_error("invalid sense id: '" + std::string(s) + "'");
  SenseId id;
  id.lemma = std::string(s.substr(0, h1));
  if (id.lemma.empty() || id.lemma != ascii_lower(id.lemma))
    throw format_error("sense id lemma must be non-empty lowercase: '" +
                       std::string(s) + "'");
  id.pos = parse_pos(s.substr(h1 + 1, h2 - h1 - 1));
  const std::string num(s.substr(h2 + 1));
  if (num.empty()) throw format_error("missing sense number: '" + std::string(s) + "'");
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw format_error("invalid sense number: '" + std::string(s) + "'");
  id.sense_no = std::stoi(num);
  if (id.sense_no < 1)
    throw format_error("sense number must be >= 1: '" + std::string(s) + "'");
  return id;
}

std::string lemma_pos_key(std::string_view lemma, Pos pos) {
  return std::string(lemma) + "#" + pos_char(pos);
}

}  // namespace topicsig
