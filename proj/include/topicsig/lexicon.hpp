#pragma once

#include <bitset>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "topicsig/sense.hpp"

namespace topicsig {

// The per-sense information sources cuewords can be drawn from.
enum class CueSource {
  synonyms,
  gloss,
  examples,
  hypernyms,
  hyponyms,
  sisters,
  meronyms,
  holonyms,
  attributes,
};
inline constexpr int kNumCueSources = 9;

// Subset of cueword sources, defaulting to none; use all() for everything.
class SourceSet {
 public:
  SourceSet() = default;
  static SourceSet all();
  static SourceSet of(std::initializer_list<CueSource> sources);
  // Parses names like "synonyms,gloss,hypernyms".
  static SourceSet parse(const std::vector<std::string>& names);

  SourceSet& set(CueSource s);
  bool has(CueSource s) const;
  bool empty() const { return bits_.none(); }
  std::vector<std::string> names() const;

  friend bool operator==(const SourceSet&, const SourceSet&) = default;

 private:
  std::bitset<kNumCueSources> bits_;
};

struct SenseEntry {
  SenseId id;
  std::vector<std::string> synonyms;
  std::string gloss;
  std::vector<std::string> examples;
  std::vector<std::string> hypernyms;
  std::vector<std::string> hyponyms;
  std::vector<std::string> sisters;
  std::vector<std::string> meronyms;
  std::vector<std::string> holonyms;
  std::vector<std::string> attributes;
  // Optional per-sense noun whitelist for gloss extraction (see
  // CuewordOptions::gloss_nouns_only).
  std::vector<std::string> gloss_nouns;

  friend bool operator==(const SenseEntry&, const SenseEntry&) = default;
};

// Immutable after load; safe for concurrent reads.
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  // Throws lookup_error for unknown ids.
  const SenseEntry& entry(const SenseId& id) const;
  bool contains(const SenseId& id) const;

  // Sense ids in sense_no order; empty when the lemma is absent.
  std::vector<SenseId> senses_of(std::string_view lemma, Pos pos) const;

  const std::map<SenseId, SenseEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  void add_entry(SenseEntry entry);  // enforces ordering/gap invariants

 private:
  std::map<SenseId, SenseEntry> entries_;
  std::map<std::string, std::vector<SenseId>> index_;  // key: lemma#pos
};

struct CuewordOptions {
  // When set and the lexicon record carries a gloss_nouns whitelist, gloss
  // and example content words are restricted to that whitelist.
  bool gloss_nouns_only = false;
};

// Union of the selected sources for one sense, lowercased. Relation entries
// contribute verbatim (possibly multiword) phrases; gloss and examples
// contribute their content words. The target lemma itself is never emitted.
std::set<std::string> raw_cuewords(const Lexicon& lex, const SenseId& id,
                                   const SourceSet& sources,
                                   const CuewordOptions& opts = {});

}  // namespace topicsig
