#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "topicsig/lexicon.hpp"
#include "topicsig/sense.hpp"

namespace topicsig {

// Per-sense cueword phrases for one lemma, after the conflict-discard rule:
// a phrase that showed up in the raw cueword sets of two or more senses is
// removed from all of them.
struct CuewordMap {
  std::string lemma;
  Pos pos = Pos::noun;
  std::map<SenseId, std::set<std::string>> per_sense;
};

CuewordMap extract_cuewords(const Lexicon& lex, std::string_view lemma,
                            Pos pos, const SourceSet& sources,
                            const CuewordOptions& opts = {});

struct QueryNode;
using QueryNodePtr = std::shared_ptr<const QueryNode>;

struct QueryNode {
  enum class Kind { phrase, and_, or_, not_ };
  Kind kind = Kind::phrase;
  std::vector<std::string> words;      // phrase only; non-empty
  std::vector<QueryNodePtr> children;  // and/or: >=1; not: exactly 1

  static QueryNodePtr phrase(std::vector<std::string> words);
  static QueryNodePtr phrase_of(std::string_view text);  // split on spaces
  static QueryNodePtr and_of(std::vector<QueryNodePtr> children);
  static QueryNodePtr or_of(std::vector<QueryNodePtr> children);
  static QueryNodePtr not_of(QueryNodePtr child);
};

bool query_tree_equal(const QueryNodePtr& a, const QueryNodePtr& b);

struct BooleanQuery {
  QueryNodePtr root;
  std::optional<SenseId> target;  // set for template-built queries
};

// Canonical template: And(Phrase(lemma), Or(own cuewords),
// Not(Or(other senses' cuewords))), the Not arm absent when the other
// senses contributed nothing. Or children are sorted lexicographically.
BooleanQuery build_query(const CuewordMap& map, const SenseId& target);

// Deterministic surface form: parenthesized, uppercase AND / OR / AND NOT,
// multiword phrases single-quoted, single words bare.
std::string render_query(const BooleanQuery& q);

// Inverse of render_query on its output; exists for round-trip checking.
BooleanQuery parse_query(std::string_view text);

// True iff the query matches the token sequence. Comparison is
// case-insensitive; a phrase matches only as a contiguous run of its words.
bool eval_query(const BooleanQuery& q, std::span<const std::string> doc_tokens);

}  // namespace topicsig
