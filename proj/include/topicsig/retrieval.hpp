#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "topicsig/lexicon.hpp"
#include "topicsig/query.hpp"
#include "topicsig/sense.hpp"

namespace topicsig {

struct Document {
  std::string doc_id;        // unique within a collection
  std::string uri;           // file path or URL
  std::string text;          // plain text, tags already stripped
  std::string retrieved_at;  // UTC timestamp; empty for the local source

  friend bool operator==(const Document&, const Document&) = default;
};

// Per-sense retrieved documents, in source order (rank order for remote,
// path order for local).
struct DocumentCollection {
  SenseId sense;
  std::vector<Document> documents;
  std::string query_rendered;
};

struct SourceConfig {
  enum class Kind { local, remote };
  Kind kind = Kind::local;
  std::string root_or_endpoint;  // corpus directory or search URL
  int max_docs = 100;
  int concurrency = 4;
  double timeout_s = 10.0;
  int retries = 0;
  std::string api_key_env;

  void validate() const;  // throws config_error
};

// Resolves the query into at most max_docs documents. The local backend
// returns exactly the corpus documents for which eval_query is true, in
// deterministic path order; the remote backend queries the search API,
// fetches result URIs, strips markup and deduplicates by URI.
DocumentCollection search(const SourceConfig& src, const BooleanQuery& q);

DocumentCollection local_search(const SourceConfig& src,
                                const BooleanQuery& q);
DocumentCollection remote_search(const SourceConfig& src,
                                 const BooleanQuery& q);

struct FetchResult {
  std::map<SenseId, DocumentCollection> collections;
  struct Skip {
    SenseId sense;
    std::string reason;
  };
  std::vector<Skip> skipped;
};

// One collection per buildable sense; per-sense searches run concurrently up
// to src.concurrency. Senses with no usable query are skipped with a warning
// record; throws only if no sense succeeds.
FetchResult fetch_collections(const Lexicon& lex, std::string_view lemma,
                              Pos pos, const SourceConfig& src,
                              const SourceSet& sources,
                              const CuewordOptions& opts = {});

// Store layout: <dir>/<lemma>#<pos>/<sense_no>/manifest plus one
// <doc_id>.txt per document. All writes are temp-then-rename.
void save_collection(const DocumentCollection& c,
                     const std::filesystem::path& collections_dir);
DocumentCollection load_collection(const std::filesystem::path& collections_dir,
                                   const SenseId& sense);
// save + load; the result equals the input in ids, order and text bytes.
DocumentCollection store_roundtrip(const DocumentCollection& c,
                                   const std::filesystem::path& dir);

// Tag stripping and entity decoding, nothing more.
std::string strip_html(std::string_view html);

}  // namespace topicsig
