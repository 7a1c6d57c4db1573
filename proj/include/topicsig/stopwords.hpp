#pragma once

#include <string_view>
#include <vector>

namespace topicsig {

// Fixed function-word list used when pulling content words out of glosses
// and examples. The full list is in stopwords.cpp and documented in the
// README; it never changes at runtime.
bool is_stopword(std::string_view lowercased_word);

const std::vector<std::string_view>& stopword_list();

}  // namespace topicsig
