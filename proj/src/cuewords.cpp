#include <map>

#include "topicsig/errors.hpp"
#include "topicsig/query.hpp"

namespace topicsig {

CuewordMap extract_cuewords(const Lexicon& lex, std::string_view lemma,
                            Pos pos, const SourceSet& sources,
                            const CuewordOptions& opts) {
  const std::vector<SenseId> senses = lex.senses_of(lemma, pos);
  if (senses.empty())
    throw lookup_error("lemma has no senses: " + lemma_pos_key(lemma, pos));

  CuewordMap map;
  map.lemma = std::string(lemma);
  map.pos = pos;
  std::map<std::string, int> occurrences;
  for (const SenseId& id : senses) {
    auto cues = raw_cuewords(lex, id, sources, opts);
    for (const std::string& c : cues) ++occurrences[c];
    map.per_sense.emplace(id, std::move(cues));
  }
  // A cueword attested for more than one sense pins down none of them.
  for (auto& [id, cues] : map.per_sense) {
    (void)id;
    for (auto it = cues.begin(); it != cues.end();)
      it = occurrences.at(*it) > 1 ? cues.erase(it) : std::next(it);
  }
  return map;
}

}  // namespace topicsig
