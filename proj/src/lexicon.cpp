#include "topicsig/lexicon.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/stopwords.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

using nlohmann::json;

namespace {

const char* source_name(CueSource s) {
  switch (s) {
    case CueSource::synonyms: return "synonyms";
    case CueSource::gloss: return "gloss";
    case CueSource::examples: return "examples";
    case CueSource::hypernyms: return "hypernyms";
    case CueSource::hyponyms: return "hyponyms";
    case CueSource::sisters: return "sisters";
    case CueSource::meronyms: return "meronyms";
    case CueSource::holonyms: return "holonyms";
    case CueSource::attributes: return "attributes";
  }
  return "?";
}

std::vector<std::string> string_list(const json& rec, const char* key,
                                     int line_no) {
  std::vector<std::string> out;
  if (!rec.contains(key)) return out;
  const json& v = rec.at(key);
  if (!v.is_array())
    throw format_error("lexicon line " + std::to_string(line_no) + ": '" +
                       key + "' must be an array of strings");
  for (const json& item : v) {
    if (!item.is_string())
      throw format_error("lexicon line " + std::to_string(line_no) + ": '" +
                         key + "' must contain only strings");
    std::string s = normalize_spaces(item.get<std::string>());
    if (s.empty())
      throw format_error("lexicon line " + std::to_string(line_no) + ": '" +
                         key + "' contains an empty string");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SourceSet SourceSet::all() {
  SourceSet s;
  s.bits_.set();
  return s;
}

SourceSet SourceSet::of(std::initializer_list<CueSource> sources) {
  SourceSet s;
  for (CueSource src : sources) s.set(src);
  return s;
}

SourceSet SourceSet::parse(const std::vector<std::string>& names) {
  SourceSet s;
  for (const std::string& name : names) {
    bool found = false;
    for (int i = 0; i < kNumCueSources; ++i) {
      if (name == source_name(static_cast<CueSource>(i))) {
        s.set(static_cast<CueSource>(i));
        found = true;
        break;
      }
    }
    if (!found) throw config_error("unknown cueword source: '" + name + "'");
  }
  return s;
}

SourceSet& SourceSet::set(CueSource s) {
  bits_.set(static_cast<std::size_t>(s));
  return *this;
}

bool SourceSet::has(CueSource s) const {
  return bits_.test(static_cast<std::size_t>(s));
}

std::vector<std::string> SourceSet::names() const {
  std::vector<std::string> out;
  for (int i = 0; i < kNumCueSources; ++i)
    if (bits_.test(i)) out.push_back(source_name(static_cast<CueSource>(i)));
  return out;
}

void Lexicon::add_entry(SenseEntry entry) {
  if (entry.gloss.empty())
    throw format_error("sense " + entry.id.str() + " has an empty gloss");
  const std::string key = lemma_pos_key(entry.id.lemma, entry.id.pos);
  if (entries_.count(entry.id))
    throw format_error("duplicate sense id " + entry.id.str());
  auto& order = index_[key];
  const int expected = static_cast<int>(order.size()) + 1;
  if (entry.id.sense_no != expected)
    throw format_error("gap in sense numbering for " + key + ": got sense " +
                       std::to_string(entry.id.sense_no) + ", expected " +
                       std::to_string(expected));
  order.push_back(entry.id);
  entries_.emplace(entry.id, std::move(entry));
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot read lexicon file: " + path.string());
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw format_error("lexicon line " + std::to_string(line_no) +
                         ": unreadable record: " + e.what());
    }
    if (!rec.is_object() || !rec.contains("id") || !rec.at("id").is_string())
      throw format_error("lexicon line " + std::to_string(line_no) +
                         ": record must be an object with a string 'id'");
    SenseEntry entry;
    try {
      entry.id = SenseId::parse(rec.at("id").get<std::string>());
    } catch (const format_error& e) {
      throw format_error("lexicon line " + std::to_string(line_no) + ": " +
                         e.what());
    }
    entry.synonyms = string_list(rec, "synonyms", line_no);
    entry.gloss =
        rec.contains("gloss") ? rec.at("gloss").get<std::string>() : "";
    entry.examples = string_list(rec, "examples", line_no);
    entry.hypernyms = string_list(rec, "hypernyms", line_no);
    entry.hyponyms = string_list(rec, "hyponyms", line_no);
    entry.sisters = string_list(rec, "sisters", line_no);
    entry.meronyms = string_list(rec, "meronyms", line_no);
    entry.holonyms = string_list(rec, "holonyms", line_no);
    entry.attributes = string_list(rec, "attributes", line_no);
    entry.gloss_nouns = string_list(rec, "gloss_nouns", line_no);
    try {
      lex.add_entry(std::move(entry));
    } catch (const format_error& e) {
      throw format_error("lexicon line " + std::to_string(line_no) + ": " +
                         e.what());
    }
  }
  return lex;
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ostringstream out;
  for (const auto& [key, order] : index_) {
    (void)key;
    for (const SenseId& id : order) {
      const SenseEntry& e = entries_.at(id);
      json rec;
      rec["id"] = id.str();
      if (!e.synonyms.empty()) rec["synonyms"] = e.synonyms;
      rec["gloss"] = e.gloss;
      if (!e.examples.empty()) rec["examples"] = e.examples;
      if (!e.hypernyms.empty()) rec["hypernyms"] = e.hypernyms;
      if (!e.hyponyms.empty()) rec["hyponyms"] = e.hyponyms;
      if (!e.sisters.empty()) rec["sisters"] = e.sisters;
      if (!e.meronyms.empty()) rec["meronyms"] = e.meronyms;
      if (!e.holonyms.empty()) rec["holonyms"] = e.holonyms;
      if (!e.attributes.empty()) rec["attributes"] = e.attributes;
      if (!e.gloss_nouns.empty()) rec["gloss_nouns"] = e.gloss_nouns;
      out << rec.dump() << "\n";
    }
  }
  atomic_write_file(path, out.str());
}

const SenseEntry& Lexicon::entry(const SenseId& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end())
    throw lookup_error("unknown sense id " + id.str());
  return it->second;
}

bool Lexicon::contains(const SenseId& id) const {
  return entries_.count(id) != 0;
}

std::vector<SenseId> Lexicon::senses_of(std::string_view lemma,
                                        Pos pos) const {
  auto it = index_.find(lemma_pos_key(lemma, pos));
  if (it == index_.end()) return {};
  return it->second;
}

std::set<std::string> raw_cuewords(const Lexicon& lex, const SenseId& id,
                                   const SourceSet& sources,
                                   const CuewordOptions& opts) {
  const SenseEntry& e = lex.entry(id);
  std::set<std::string> out;

  auto add_phrase = [&](const std::string& phrase) {
    std::string p = ascii_lower(normalize_spaces(phrase));
    if (!p.empty() && p != id.lemma) out.insert(std::move(p));
  };
  auto add_relations = [&](CueSource src,
                           const std::vector<std::string>& items) {
    if (!sources.has(src)) return;
    for (const std::string& item : items) add_phrase(item);
  };

  add_relations(CueSource::synonyms, e.synonyms);
  add_relations(CueSource::hypernyms, e.hypernyms);
  add_relations(CueSource::hyponyms, e.hyponyms);
  add_relations(CueSource::sisters, e.sisters);
  add_relations(CueSource::meronyms, e.meronyms);
  add_relations(CueSource::holonyms, e.holonyms);
  add_relations(CueSource::attributes, e.attributes);

  const bool restrict_to_nouns =
      opts.gloss_nouns_only && !e.gloss_nouns.empty();
  std::set<std::string> noun_whitelist;
  if (restrict_to_nouns)
    for (const std::string& w : e.gloss_nouns)
      noun_whitelist.insert(ascii_lower(w));

  auto add_content_words = [&](const std::string& text) {
    for (const std::string& tok : tokenize(text)) {
      std::string w = ascii_lower(tok);
      if (w.empty() || w == id.lemma || is_stopword(w)) continue;
      if (restrict_to_nouns && !noun_whitelist.count(w)) continue;
      out.insert(std::move(w));
    }
  };
  if (sources.has(CueSource::gloss)) add_content_words(e.gloss);
  if (sources.has(CueSource::examples))
    for (const std::string& ex : e.examples) add_content_words(ex);

  return out;
}

}  // namespace topicsig
