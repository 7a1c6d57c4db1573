#include "topicsig/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/signature.hpp"

namespace topicsig {

using nlohmann::json;

Linkage parse_linkage(std::string_view name) {
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  if (name == "median") return Linkage::median;
  if (name == "ward") return Linkage::ward;
  throw config_error("unknown linkage: '" + std::string(name) + "'");
}

std::string linkage_name(Linkage l) {
  switch (l) {
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
    case Linkage::median: return "median";
    case Linkage::ward: return "ward";
  }
  return "?";
}

std::vector<int> Dendrogram::members(int node_id) const {
  const int n = static_cast<int>(leaves.size());
  std::vector<int> out;
  std::vector<int> stack{node_id};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < n) {
      out.push_back(id);
    } else {
      const Merge& m = merges.at(id - n);
      stack.push_back(m.left);
      stack.push_back(m.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Partition::cluster_of(const SenseId& id) const {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (const SenseId& s : clusters[i])
      if (s == id) return i;
  throw lookup_error("sense not in partition: " + id.str());
}

double cosine_similarity(const FrequencyVector& u, const FrequencyVector& v) {
  if (u.total == 0 || v.total == 0)
    throw error("cosine similarity undefined for a zero vector");
  long double dot = 0, nu = 0, nv = 0;
  for (const auto& [w, c] : u.counts) {
    nu += static_cast<long double>(c) * c;
    const std::int64_t cv = v.count(w);
    if (cv) dot += static_cast<long double>(c) * cv;
  }
  for (const auto& [w, c] : v.counts) {
    (void)w;
    nv += static_cast<long double>(c) * c;
  }
  return static_cast<double>(dot / (std::sqrt(nu) * std::sqrt(nv)));
}

namespace {

struct Active {
  int node_id;
  int size;
  int min_leaf;
};

}  // namespace

Dendrogram agglomerate_distances(std::vector<std::vector<double>> dist,
                                 Linkage linkage,
                                 const std::vector<SenseId>& labels) {
  const int n = static_cast<int>(dist.size());
  if (n < 2) throw error("agglomerate requires at least 2 items");
  if (static_cast<int>(labels.size()) != n)
    throw error("label count does not match distance matrix");

  // Median and ward run the recurrence over squared distances; the recorded
  // merge height is the square root, commensurable with the input metric.
  const bool squared = linkage == Linkage::median || linkage == Linkage::ward;
  if (squared)
    for (auto& row : dist)
      for (double& x : row) x *= x;

  Dendrogram d;
  d.leaves = labels;

  std::vector<Active> active;
  active.reserve(n);
  for (int i = 0; i < n; ++i) active.push_back({i, 1, i});

  double prev_height = -std::numeric_limits<double>::infinity();
  for (int step = 0; step < n - 1; ++step) {
    // Find the closest active pair; ties resolve to the pair with the
    // lowest (leftmost, then rightmost) minimum leaf index.
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const double dd = dist[a][b];
        int lo = std::min(active[a].min_leaf, active[b].min_leaf);
        int hi = std::max(active[a].min_leaf, active[b].min_leaf);
        if (bi >= 0) {
          int blo = std::min(active[bi].min_leaf, active[bj].min_leaf);
          int bhi = std::max(active[bi].min_leaf, active[bj].min_leaf);
          if (dd > best) continue;
          if (dd == best && std::make_pair(lo, hi) >= std::make_pair(blo, bhi))
            continue;
        }
        best = dd;
        bi = static_cast<int>(a);
        bj = static_cast<int>(b);
      }
    }

    const Active ci = active[bi];
    const Active cj = active[bj];
    const Active* first = ci.min_leaf <= cj.min_leaf ? &ci : &cj;
    const Active* second = first == &ci ? &cj : &ci;
    const double height = squared ? std::sqrt(best) : best;
    if (height < prev_height - 1e-12) ++d.inversions;
    prev_height = height;
    d.merges.push_back({first->node_id, second->node_id, height,
                        std::clamp(1.0 - height, 0.0, 1.0)});

    // Lance-Williams update of distances to the merged cluster, written
    // into slot bi; slot bj is retired.
    const double dij = dist[bi][bj];
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (static_cast<int>(k) == bi || static_cast<int>(k) == bj) continue;
      const double dik = dist[bi][k];
      const double djk = dist[bj][k];
      double merged = 0;
      switch (linkage) {
        case Linkage::single:
          merged = std::min(dik, djk);
          break;
        case Linkage::complete:
          merged = std::max(dik, djk);
          break;
        case Linkage::median:
          merged = 0.5 * dik + 0.5 * djk - 0.25 * dij;
          break;
        case Linkage::ward: {
          const double ni = ci.size, nj = cj.size, nk = active[k].size;
          merged = ((ni + nk) * dik + (nj + nk) * djk - nk * dij) /
                   (ni + nj + nk);
          break;
        }
      }
      dist[bi][k] = dist[k][bi] = merged;
    }

    active[bi] = {n + step, ci.size + cj.size,
                  std::min(ci.min_leaf, cj.min_leaf)};
    active.erase(active.begin() + bj);
    for (auto& row : dist) row.erase(row.begin() + bj);
    dist.erase(dist.begin() + bj);
  }
  return d;
}

Dendrogram agglomerate(const std::vector<FrequencyVector>& vectors,
                       Linkage linkage, const std::vector<SenseId>& labels) {
  const int n = static_cast<int>(vectors.size());
  if (n < 2) throw error("agglomerate requires at least 2 vectors");
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] =
          1.0 - cosine_similarity(vectors[i], vectors[j]);
  return agglomerate_distances(std::move(dist), linkage, labels);
}

Partition cut(const Dendrogram& d, int k) {
  const int n = static_cast<int>(d.leaves.size());
  if (k < 1 || k > n)
    throw range_error("cut level k=" + std::to_string(k) +
                      " out of range 1.." + std::to_string(n));
  // Applying the first n-k merges (undoing the k-1 most recent) leaves k
  // clusters.
  std::vector<int> group_of(n);
  for (int i = 0; i < n; ++i) group_of[i] = i;
  for (int step = 0; step < n - k; ++step) {
    const int id = n + step;
    for (int leaf : d.members(id)) group_of[leaf] = id;
  }

  Partition p;
  p.k = k;
  std::vector<int> seen_group;
  for (int leaf = 0; leaf < n; ++leaf) {
    const int g = group_of[leaf];
    auto it = std::find(seen_group.begin(), seen_group.end(), g);
    std::size_t idx;
    if (it == seen_group.end()) {
      seen_group.push_back(g);
      p.clusters.emplace_back();
      idx = p.clusters.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - seen_group.begin());
    }
    p.clusters[idx].push_back(d.leaves[leaf]);
  }
  return p;
}

std::map<Partition::Level, Partition> granularity_levels(const Dendrogram& d) {
  const int n = static_cast<int>(d.leaves.size());
  if (n < 2) throw error("granularity levels require at least 2 senses");
  std::map<Partition::Level, Partition> out;
  Partition fine = cut(d, n);
  fine.level_tag = Partition::Level::fine;
  out.emplace(Partition::Level::fine, std::move(fine));
  if (n - 1 > 2) {
    Partition medium = cut(d, n - 1);
    medium.level_tag = Partition::Level::medium;
    out.emplace(Partition::Level::medium, std::move(medium));
  }
  Partition coarse = cut(d, 2);
  coarse.level_tag = Partition::Level::coarse;
  out.emplace(Partition::Level::coarse, std::move(coarse));
  return out;
}

namespace {

std::string render_node(const Dendrogram& d, int node_id) {
  const int n = static_cast<int>(d.leaves.size());
  if (node_id < n) return std::to_string(d.leaves[node_id].sense_no);
  const auto& m = d.merges[node_id - n];
  return "(" + render_node(d, m.left) + "," + render_node(d, m.right) +
         "):" + format_weight(m.similarity);
}

}  // namespace

std::string render_dendrogram(const Dendrogram& d) {
  if (d.leaves.empty()) throw error("empty dendrogram");
  return render_node(d, d.node_count() - 1);
}

void save_dendrogram(const Dendrogram& d, const std::filesystem::path& nested,
                     const std::filesystem::path& manifest) {
  atomic_write_file(nested, render_dendrogram(d) + "\n");
  json doc;
  doc["leaves"] = json::array();
  for (const SenseId& id : d.leaves) doc["leaves"].push_back(id.str());
  doc["inversions"] = d.inversions;
  doc["merges"] = json::array();
  for (std::size_t i = 0; i < d.merges.size(); ++i) {
    const auto& m = d.merges[i];
    doc["merges"].push_back({{"step", i},
                             {"left", m.left},
                             {"right", m.right},
                             {"distance", m.distance},
                             {"similarity", m.similarity}});
  }
  atomic_write_file(manifest, doc.dump(2) + "\n");
}

Dendrogram load_dendrogram_manifest(const std::filesystem::path& manifest) {
  json doc;
  try {
    doc = json::parse(read_file(manifest));
  } catch (const json::exception& e) {
    throw format_error("bad dendrogram manifest " + manifest.string() + ": " +
                       e.what());
  }
  Dendrogram d;
  for (const auto& leaf : doc.at("leaves"))
    d.leaves.push_back(SenseId::parse(leaf.get<std::string>()));
  d.inversions = doc.value("inversions", 0);
  for (const auto& m : doc.at("merges"))
    d.merges.push_back({m.at("left").get<int>(), m.at("right").get<int>(),
                        m.at("distance").get<double>(),
                        m.at("similarity").get<double>()});
  if (d.leaves.size() < 2 || d.merges.size() != d.leaves.size() - 1)
    throw format_error("dendrogram manifest is not a binary hierarchy: " +
                       manifest.string());
  return d;
}

std::string render_partition(const Partition& p) {
  std::ostringstream out;
  for (const auto& cluster : p.clusters) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      if (i) out << ",";
      out << cluster[i].sense_no;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace topicsig
