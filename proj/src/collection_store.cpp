#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/retrieval.hpp"

namespace topicsig {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path collection_dir(const fs::path& root, const SenseId& sense) {
  return root / lemma_pos_key(sense.lemma, sense.pos) /
         std::to_string(sense.sense_no);
}

}  // namespace

void save_collection(const DocumentCollection& c,
                     const fs::path& collections_dir) {
  const fs::path dir = collection_dir(collections_dir, c.sense);
  fs::create_directories(dir);
  std::set<std::string> ids;
  for (const Document& d : c.documents)
    if (!ids.insert(d.doc_id).second)
      throw error("duplicate doc_id in collection: " + d.doc_id);
  std::ostringstream manifest;
  for (const Document& d : c.documents) {
    atomic_write_file(dir / (d.doc_id + ".txt"), d.text);
    json line;
    line["doc_id"] = d.doc_id;
    line["uri"] = d.uri;
    line["retrieved_at"] = d.retrieved_at;
    line["sha256"] = sha256_hex(d.text);
    manifest << line.dump() << "\n";
  }
  json header;
  header["sense"] = c.sense.str();
  header["query"] = c.query_rendered;
  atomic_write_file(dir / "manifest",
                    header.dump() + "\n" + manifest.str());
}

DocumentCollection load_collection(const fs::path& collections_dir,
                                   const SenseId& sense) {
  const fs::path dir = collection_dir(collections_dir, sense);
  const fs::path manifest = dir / "manifest";
  if (!fs::exists(manifest))
    throw config_error("no stored collection for " + sense.str() + " under " +
                       collections_dir.string());
  std::ifstream in(manifest);
  std::string line;
  int line_no = 0;
  DocumentCollection c;
  c.sense = sense;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw format_error(manifest.string() + ":" + std::to_string(line_no) +
                         ": " + e.what());
    }
    if (line_no == 1 && rec.contains("sense")) {
      c.query_rendered = rec.value("query", "");
      continue;
    }
    Document d;
    d.doc_id = rec.at("doc_id").get<std::string>();
    d.uri = rec.at("uri").get<std::string>();
    d.retrieved_at = rec.value("retrieved_at", "");
    d.text = read_file(dir / (d.doc_id + ".txt"));
    const std::string expect = rec.at("sha256").get<std::string>();
    if (sha256_hex(d.text) != expect)
      throw format_error("stored text hash mismatch for " + d.doc_id +
                         " in " + dir.string());
    c.documents.push_back(std::move(d));
  }
  return c;
}

DocumentCollection store_roundtrip(const DocumentCollection& c,
                                   const fs::path& dir) {
  save_collection(c, dir);
  return load_collection(dir, c.sense);
}

}  // namespace topicsig
