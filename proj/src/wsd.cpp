#include "topicsig/wsd.hpp"

#include <algorithm>
#include <unordered_map>

#include "topicsig/errors.hpp"
#include "topicsig/stopwords.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

ContextWindow extract_context(const std::vector<std::string>& tokens,
                              std::size_t target_index, int width) {
  if (target_index >= tokens.size())
    throw range_error("target index " + std::to_string(target_index) +
                      " out of range for " + std::to_string(tokens.size()) +
                      " tokens");
  if (width < 0 || width % 2 != 0)
    throw range_error("window width must be even and >= 0");
  ContextWindow w;
  w.width = width;
  const std::size_t half = static_cast<std::size_t>(width) / 2;
  const std::size_t lo = target_index >= half ? target_index - half : 0;
  const std::size_t hi = std::min(tokens.size(), target_index + half + 1);
  for (std::size_t i = lo; i < hi; ++i)
    if (i != target_index) w.tokens.push_back(tokens[i]);
  return w;
}

double score_sense(const ContextWindow& w, const TopicSignature& s) {
  std::unordered_map<std::string_view, double> weights;
  weights.reserve(s.entries.size());
  for (const SignatureEntry& e : s.entries) weights.emplace(e.word, e.weight);
  double total = 0.0;
  for (const std::string& tok : w.tokens) {
    auto it = weights.find(std::string_view(tok));
    if (it != weights.end()) total += it->second;
  }
  return total;
}

SenseScore disambiguate(const ContextWindow& w,
                        const std::map<SenseId, TopicSignature>& sigs) {
  if (sigs.empty())
    throw config_error("disambiguate needs at least one signature");
  SenseScore out;
  bool any_positive = false;
  double best = -1.0;
  for (const auto& [id, sig] : sigs) {
    const double score = score_sense(w, sig);
    out.per_sense.emplace(id, score);
    if (score > 0) any_positive = true;
    // std::map iterates in sense order, so '>' keeps the lowest sense_no
    // on ties.
    if (score > best) {
      best = score;
      out.chosen = id;
    }
  }
  out.decided = any_positive;
  return out;
}

TopicSignature wordlist_signature(const Lexicon& lex, const SenseId& id,
                                  WordlistMode mode) {
  const SenseEntry& e = lex.entry(id);
  std::set<std::string> words;

  auto add_phrase_words = [&](const std::vector<std::string>& phrases) {
    for (const std::string& phrase : phrases)
      for (const std::string& w : split_words(ascii_lower(phrase)))
        if (!is_stopword(w) && w != id.lemma) words.insert(w);
  };
  auto add_content_words = [&](const std::string& text) {
    for (const std::string& tok : tokenize(text)) {
      std::string w = ascii_lower(tok);
      if (!is_stopword(w) && w != id.lemma) words.insert(std::move(w));
    }
  };

  add_phrase_words(e.synonyms);
  if (mode == WordlistMode::sdef || mode == WordlistMode::sall) {
    add_content_words(e.gloss);
    for (const std::string& ex : e.examples) add_content_words(ex);
  }
  if (mode == WordlistMode::sall) {
    add_phrase_words(e.hypernyms);
    add_phrase_words(e.hyponyms);
    add_phrase_words(e.meronyms);
  }

  TopicSignature sig;
  sig.topic = id.str();
  for (const std::string& w : words) sig.entries.push_back({w, 1.0});
  // All weights tie at 1.0, so the canonical order is word ascending, which
  // std::set already gave us.
  return sig;
}

ContextWindow lowercased(const ContextWindow& w) {
  ContextWindow out;
  out.width = w.width;
  out.tokens.reserve(w.tokens.size());
  for (const std::string& t : w.tokens) out.tokens.push_back(ascii_lower(t));
  return out;
}

namespace {

// Leaf ids of the dendrogram in ascending sense order live at indices
// matching d.leaves; descent works on node ids.
int lowest_leaf(const Dendrogram& d, int node_id) {
  auto mem = d.members(node_id);
  return mem.front();
}

}  // namespace

SenseScore hier_disambiguate_combined(
    const ContextWindow& w, const Dendrogram& d,
    const std::map<SenseId, TopicSignature>& sigs) {
  for (const SenseId& leaf : d.leaves)
    if (!sigs.count(leaf))
      throw config_error("no signature for dendrogram leaf " + leaf.str());

  SenseScore out;
  std::vector<double> leaf_score(d.leaves.size(), 0.0);
  bool any_positive = false;
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    leaf_score[i] = score_sense(w, sigs.at(d.leaves[i]));
    out.per_sense.emplace(d.leaves[i], leaf_score[i]);
    if (leaf_score[i] > 0) any_positive = true;
  }

  auto branch_sum = [&](int node_id) {
    double sum = 0.0;
    for (int leaf : d.members(node_id)) sum += leaf_score[leaf];
    return sum;
  };

  const int n = static_cast<int>(d.leaves.size());
  int node = d.node_count() - 1;
  while (node >= n) {
    const auto& m = d.merges[node - n];
    const double ls = branch_sum(m.left);
    const double rs = branch_sum(m.right);
    if (ls > rs) {
      node = m.left;
    } else if (rs > ls) {
      node = m.right;
    } else {
      node = lowest_leaf(d, m.left) <= lowest_leaf(d, m.right) ? m.left
                                                               : m.right;
    }
  }
  out.chosen = d.leaves[node];
  out.decided = any_positive;
  return out;
}

std::string cluster_key(std::string_view lemma, Pos pos,
                        const std::vector<int>& member_sense_nos) {
  std::string key = lemma_pos_key(lemma, pos) + ":{";
  for (std::size_t i = 0; i < member_sense_nos.size(); ++i) {
    if (i) key += "+";
    key += std::to_string(member_sense_nos[i]);
  }
  return key + "}";
}

std::map<std::string, TopicSignature> build_cluster_signatures_from_vectors(
    const std::map<SenseId, FrequencyVector>& vectors, const Dendrogram& d) {
  for (const SenseId& leaf : d.leaves)
    if (!vectors.count(leaf))
      throw config_error("no collection vector for dendrogram leaf " +
                         leaf.str());

  const int n = static_cast<int>(d.leaves.size());
  auto node_vector = [&](int node_id) {
    FrequencyVector v;
    for (int leaf : d.members(node_id))
      v.add_all(vectors.at(d.leaves[leaf]));
    return v;
  };
  auto key_of = [&](int node_id) {
    std::vector<int> nos;
    for (int leaf : d.members(node_id))
      nos.push_back(d.leaves[leaf].sense_no);
    return cluster_key(d.leaves.front().lemma, d.leaves.front().pos, nos);
  };

  std::map<std::string, TopicSignature> out;
  for (int step = 0; step < n - 1; ++step) {
    const auto& m = d.merges[step];
    FrequencyVector left = node_vector(m.left);
    FrequencyVector right = node_vector(m.right);
    left.owner = key_of(m.left);
    right.owner = key_of(m.right);
    ContingencyTable t = ContingencyTable::build({left, right});
    TopicSignature ls = chi2_signature(t, 0);
    TopicSignature rs = chi2_signature(t, 1);
    out.emplace(ls.topic, std::move(ls));
    out.emplace(rs.topic, std::move(rs));
  }
  return out;
}

std::map<std::string, TopicSignature> build_cluster_signatures(
    const std::map<SenseId, DocumentCollection>& collections,
    const Dendrogram& d) {
  std::map<SenseId, FrequencyVector> vectors;
  for (const auto& [id, coll] : collections)
    vectors.emplace(id, frequency_vector(coll));
  return build_cluster_signatures_from_vectors(vectors, d);
}

SenseScore hier_disambiguate_new(
    const ContextWindow& w, const Dendrogram& d,
    const std::map<std::string, TopicSignature>& cluster_sigs) {
  const int n = static_cast<int>(d.leaves.size());
  auto key_of = [&](int node_id) {
    std::vector<int> nos;
    for (int leaf : d.members(node_id))
      nos.push_back(d.leaves[leaf].sense_no);
    return cluster_key(d.leaves.front().lemma, d.leaves.front().pos, nos);
  };
  auto sig_of = [&](int node_id) -> const TopicSignature& {
    auto it = cluster_sigs.find(key_of(node_id));
    if (it == cluster_sigs.end())
      throw config_error("missing cluster signature " + key_of(node_id));
    return it->second;
  };

  SenseScore out;
  // Diagnostic per-sense score: the sum of each sense's own-cluster scores
  // along its root-to-leaf path. The chosen sense comes from greedy descent.
  std::vector<double> leaf_path_score(d.leaves.size(), 0.0);
  std::vector<double> node_score(d.node_count(), 0.0);
  for (int id = 0; id < d.node_count() - 1; ++id)
    node_score[id] = score_sense(w, sig_of(id));
  for (int leaf = 0; leaf < n; ++leaf) {
    int node = leaf;
    double sum = node_score[leaf];
    // walk upward: find parent merges containing this node
    for (int step = 0; step < n - 1; ++step) {
      const auto& m = d.merges[step];
      if (m.left == node || m.right == node) {
        node = n + step;
        if (node != d.node_count() - 1) sum += node_score[node];
      }
    }
    leaf_path_score[leaf] = sum;
    out.per_sense.emplace(d.leaves[leaf], sum);
  }

  bool all_ties = true;
  int node = d.node_count() - 1;
  while (node >= n) {
    const auto& m = d.merges[node - n];
    const double ls = node_score[m.left];
    const double rs = node_score[m.right];
    if (ls > rs) {
      node = m.left;
      all_ties = false;
    } else if (rs > ls) {
      node = m.right;
      all_ties = false;
    } else {
      if (ls != 0.0) all_ties = false;  // a decided tie still counts as evidence
      node = lowest_leaf(d, m.left) <= lowest_leaf(d, m.right) ? m.left
                                                               : m.right;
    }
  }
  out.chosen = d.leaves[node];
  out.decided = !all_ties;
  return out;
}

}  // namespace topicsig
