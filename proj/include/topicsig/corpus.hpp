#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "topicsig/sense.hpp"

namespace topicsig {

// One sense-tagged occurrence of a target word.
struct TaggedInstance {
  std::string instance_id;
  std::vector<std::string> tokens;
  std::size_t target_index = 0;
  std::string lemma;
  Pos pos = Pos::noun;
  SenseId gold;
};

// Line-delimited objects: {instance_id, tokens, target_index, lemma, pos,
// gold_sense_no}.
std::vector<TaggedInstance> load_corpus(const std::filesystem::path& path);
void save_corpus(const std::vector<TaggedInstance>& corpus,
                 const std::filesystem::path& path);

}  // namespace topicsig
