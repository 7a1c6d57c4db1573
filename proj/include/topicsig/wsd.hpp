#pragma once

#include <map>
#include <string>
#include <vector>

#include "topicsig/cluster.hpp"
#include "topicsig/lexicon.hpp"
#include "topicsig/retrieval.hpp"
#include "topicsig/signature.hpp"

namespace topicsig {

// Bag of context tokens around a target occurrence, the target excluded.
struct ContextWindow {
  std::vector<std::string> tokens;
  int width = 100;
};

// Up to width/2 tokens on each side of target_index, truncated at the
// document bounds; width must be even and >= 0.
ContextWindow extract_context(const std::vector<std::string>& tokens,
                              std::size_t target_index, int width);

struct SenseScore {
  std::map<SenseId, double> per_sense;
  SenseId chosen;
  // False iff no evidence discriminated at all (all scores zero, or every
  // descent decision a 0-0 tie); chosen then falls back to the lowest
  // sense number.
  bool decided = false;
};

// Sum of the signature weights of the window tokens; every occurrence
// counts, matching is case-sensitive like signature construction itself.
double score_sense(const ContextWindow& w, const TopicSignature& s);

// Highest-scoring sense wins; ties and the all-zero case resolve to the
// lowest sense number.
SenseScore disambiguate(const ContextWindow& w,
                        const std::map<SenseId, TopicSignature>& sigs);

enum class WordlistMode { syn, sdef, sall };

// Word lists from the lexicon, used with the same scoring machinery:
// Syn = synonym words; S+def adds gloss/example content words; S+all adds
// hypernym, hyponym and meronym words. Multiword entries contribute their
// individual content words; every entry gets weight 1.0. Entries are
// lowercase, so callers match them against a lowercased window.
TopicSignature wordlist_signature(const Lexicon& lex, const SenseId& id,
                                  WordlistMode mode);

ContextWindow lowercased(const ContextWindow& w);

// Strategy 1 of the hierarchy methods: descend from the root, at each node
// comparing the summed member-sense scores of the two branches; the
// reported per-sense scores are the flat ones.
SenseScore hier_disambiguate_combined(
    const ContextWindow& w, const Dendrogram& d,
    const std::map<SenseId, TopicSignature>& sigs);

// Cluster key "<lemma>#<pos>:{a+b+c}" for the member sense numbers.
std::string cluster_key(std::string_view lemma, Pos pos,
                        const std::vector<int>& member_sense_nos);

// Strategy 2: one signature per child cluster of every internal node. The
// member collections are merged into one frequency vector per child and the
// chi-square weights recomputed with the sibling as contrast set.
std::map<std::string, TopicSignature> build_cluster_signatures(
    const std::map<SenseId, DocumentCollection>& collections,
    const Dendrogram& d);

// Same, starting from precomputed per-sense frequency vectors.
std::map<std::string, TopicSignature> build_cluster_signatures_from_vectors(
    const std::map<SenseId, FrequencyVector>& vectors, const Dendrogram& d);

SenseScore hier_disambiguate_new(
    const ContextWindow& w, const Dendrogram& d,
    const std::map<std::string, TopicSignature>& cluster_sigs);

}  // namespace topicsig
