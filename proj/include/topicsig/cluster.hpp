#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topicsig/frequency.hpp"
#include "topicsig/sense.hpp"

namespace topicsig {

enum class Linkage { single, complete, median, ward };
Linkage parse_linkage(std::string_view name);
std::string linkage_name(Linkage l);

// Binary merge tree over the senses of one lemma. Node ids: 0..n-1 are
// leaves (in sense order); n+k is the internal node created by merge k.
struct Dendrogram {
  struct Merge {
    int left = 0;   // node id; the side holding the lowest leaf index
    int right = 0;  // node id
    double distance = 0.0;
    double similarity = 0.0;  // 1 - distance, clamped to [0, 1]
  };

  std::vector<SenseId> leaves;
  std::vector<Merge> merges;  // in merge order; size = leaves.size() - 1
  // Number of merges whose distance decreased relative to the previous
  // merge. Median linkage may produce these; they are recorded, not an error.
  int inversions = 0;

  int node_count() const { return static_cast<int>(leaves.size() + merges.size()); }
  // Leaf indices under a node id, ascending.
  std::vector<int> members(int node_id) const;
};

struct Partition {
  enum class Level { fine, medium, coarse, custom };
  std::vector<std::vector<SenseId>> clusters;  // disjoint cover
  Level level_tag = Level::custom;
  int k = 0;

  // Index of the cluster containing the sense; throws lookup_error if absent.
  std::size_t cluster_of(const SenseId& id) const;
};

// Cosine over sparse count vectors; throws on a zero vector.
double cosine_similarity(const FrequencyVector& u, const FrequencyVector& v);

// Agglomerative clustering over distance 1 - cosine, with pair distances
// updated by the Lance-Williams recurrence for the chosen linkage (median =
// WPGMC and ward both run on squared distances). Ties pick the pair with the
// lowest (leftmost, then rightmost) leaf index.
Dendrogram agglomerate(const std::vector<FrequencyVector>& vectors,
                       Linkage linkage, const std::vector<SenseId>& labels);

// Same, over an explicit symmetric distance matrix.
Dendrogram agglomerate_distances(std::vector<std::vector<double>> dist,
                                 Linkage linkage,
                                 const std::vector<SenseId>& labels);

// Undoes the k-1 most recent merges, leaving exactly k clusters.
Partition cut(const Dendrogram& d, int k);

// fine = n clusters, coarse = 2; medium = n-1, present only when n-1 > 2.
std::map<Partition::Level, Partition> granularity_levels(const Dendrogram& d);

// Nested parenthesized form, e.g. "(((1,3):0.650000,2):0.552100,4):0.460100".
std::string render_dendrogram(const Dendrogram& d);

void save_dendrogram(const Dendrogram& d, const std::filesystem::path& nested,
                     const std::filesystem::path& manifest);
Dendrogram load_dendrogram_manifest(const std::filesystem::path& manifest);

// One cluster per line as comma-separated sense numbers.
std::string render_partition(const Partition& p);

}  // namespace topicsig
