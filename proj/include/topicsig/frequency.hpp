#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace topicsig {

struct DocumentCollection;

// Sparse term counts for one topic (a sense or a cluster of senses).
// No zero-count entries are stored; total is the sum of all counts.
struct FrequencyVector {
  std::string owner;
  std::map<std::string, std::int64_t> counts;
  std::int64_t total = 0;

  void add(const std::string& word, std::int64_t n = 1);
  void add_all(const FrequencyVector& other);
  std::int64_t count(const std::string& word) const;

  friend bool operator==(const FrequencyVector&,
                         const FrequencyVector&) = default;
};

// Counts over the tokenization of every document in the collection.
FrequencyVector frequency_vector(const DocumentCollection& collection);

// One row per sense of the same lemma; the rows other than i form the
// contrast set for row i.
struct ContingencyTable {
  std::vector<FrequencyVector> rows;
  std::map<std::string, std::int64_t> column_totals;
  std::int64_t grand_total = 0;

  static ContingencyTable build(std::vector<FrequencyVector> rows);
};

// Expected mean of word j in row i: row total x column total / grand total.
double expected_mean(const ContingencyTable& t, std::size_t row,
                     const std::string& word);

// Dense map over every (row, word in column_totals) cell.
std::map<std::pair<std::size_t, std::string>, double> expected_means(
    const ContingencyTable& t);

void save_frequency_vector(const FrequencyVector& v,
                           const std::filesystem::path& path);
FrequencyVector load_frequency_vector(const std::filesystem::path& path);

}  // namespace topicsig
