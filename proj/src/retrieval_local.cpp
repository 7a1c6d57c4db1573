#include <condition_variable>
#include <mutex>
#include <thread>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/retrieval.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

namespace fs = std::filesystem;

void SourceConfig::validate() const {
  if (root_or_endpoint.empty())
    throw config_error("source root/endpoint must not be empty");
  if (max_docs < 1) throw config_error("max_docs must be >= 1");
  if (concurrency < 1) throw config_error("concurrency must be >= 1");
  if (timeout_s <= 0) throw config_error("timeout must be > 0");
  if (retries < 0) throw config_error("retries must be >= 0");
}

DocumentCollection search(const SourceConfig& src, const BooleanQuery& q) {
  src.validate();
  return src.kind == SourceConfig::Kind::local ? local_search(src, q)
                                               : remote_search(src, q);
}

DocumentCollection local_search(const SourceConfig& src,
                                const BooleanQuery& q) {
  const fs::path root = src.root_or_endpoint;
  if (!fs::is_directory(root))
    throw config_error("local corpus root does not exist: " + root.string());

  DocumentCollection out;
  if (q.target) out.sense = *q.target;
  out.query_rendered = render_query(q);

  for (const fs::path& file : list_files_sorted(root, ".txt")) {
    if (static_cast<int>(out.documents.size()) >= src.max_docs) break;
    std::string text = read_file(file);
    const auto tokens = tokenize(text);
    if (!eval_query(q, tokens)) continue;
    std::string rel = file.lexically_relative(root).generic_string();
    std::string id = rel;
    if (id.size() > 4 && id.ends_with(".txt")) id.resize(id.size() - 4);
    for (char& c : id)
      if (c == '/') c = '_';
    out.documents.push_back({std::move(id), rel, std::move(text), ""});
  }
  return out;
}

FetchResult fetch_collections(const Lexicon& lex, std::string_view lemma,
                              Pos pos, const SourceConfig& src,
                              const SourceSet& sources,
                              const CuewordOptions& opts) {
  src.validate();
  const auto senses = lex.senses_of(lemma, pos);
  if (senses.empty())
    throw lookup_error("lemma has no senses: " + lemma_pos_key(lemma, pos));

  const CuewordMap cues = extract_cuewords(lex, lemma, pos, sources, opts);

  struct Job {
    SenseId sense;
    BooleanQuery query;
  };
  std::vector<Job> jobs;
  FetchResult result;
  for (const SenseId& id : senses) {
    try {
      jobs.push_back({id, build_query(cues, id)});
    } catch (const config_error& e) {
      result.skipped.push_back({id, e.what()});
    }
  }
  if (jobs.empty())
    throw config_error("no sense of " + lemma_pos_key(lemma, pos) +
                       " yields a buildable query");

  std::mutex mu;
  std::vector<std::string> failures;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= jobs.size()) return;
        i = next++;
      }
      try {
        DocumentCollection c = search(src, jobs[i].query);
        c.sense = jobs[i].sense;
        std::lock_guard<std::mutex> lock(mu);
        result.collections.emplace(jobs[i].sense, std::move(c));
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        failures.push_back(jobs[i].sense.str() + ": " + e.what());
        result.skipped.push_back({jobs[i].sense, e.what()});
      }
    }
  };
  const int nthreads =
      std::min<int>(src.concurrency, static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (result.collections.empty()) {
    std::string msg = "all senses failed:";
    for (const std::string& f : failures) msg += " [" + f + "]";
    throw config_error(msg);
  }
  return result;
}

}  // namespace topicsig
