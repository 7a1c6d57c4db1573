#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "topicsig/frequency.hpp"

namespace topicsig {

struct SignatureEntry {
  std::string word;
  double weight =
      0.0;  // (freq - m) / m, the relative over-representation; always > 0

  friend bool operator==(const SignatureEntry&,
                         const SignatureEntry&) = default;
};

// Ranked (word, weight) pairs for one topic, sorted by weight descending,
// ties by word ascending. Words whose weight would be zero are omitted.
struct TopicSignature {
  std::string topic;
  std::vector<SignatureEntry> entries;
  // Set when the table had fewer than two rows, so there was no contrast
  // set and every weight collapsed to zero.
  bool degenerate_contrast = false;

  friend bool operator==(const TopicSignature&,
                         const TopicSignature&) = default;
};

// Signature weights per the chi-square-style test: words of row i whose
// observed frequency exceeds the expected mean, weighted by
// (freq - m) / m. Requires grand_total > 0.
TopicSignature chi2_signature(const ContingencyTable& t, std::size_t row);

// First min(k, size) entries under the canonical order; idempotent.
TopicSignature top_k(const TopicSignature& s, std::size_t k);

// File form: "#topic <id>" header, then one "word\tweight" line per entry,
// weights printed with six decimals.
void save_signature(const TopicSignature& s, const std::filesystem::path& path);
TopicSignature load_signature(const std::filesystem::path& path);

std::string format_weight(double w);  // fixed six decimals

}  // namespace topicsig
