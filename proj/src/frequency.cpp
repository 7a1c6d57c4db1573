#include "topicsig/frequency.hpp"

#include <fstream>
#include <sstream>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/retrieval.hpp"
#include "topicsig/text.hpp"

namespace topicsig {

void FrequencyVector::add(const std::string& word, std::int64_t n) {
  if (n == 0) return;
  auto it = counts.find(word);
  if (it == counts.end()) {
    counts.emplace(word, n);
  } else {
    it->second += n;
    if (it->second == 0) counts.erase(it);
  }
  total += n;
}

void FrequencyVector::add_all(const FrequencyVector& other) {
  for (const auto& [word, n] : other.counts) add(word, n);
}

std::int64_t FrequencyVector::count(const std::string& word) const {
  auto it = counts.find(word);
  return it == counts.end() ? 0 : it->second;
}

FrequencyVector frequency_vector(const DocumentCollection& collection) {
  FrequencyVector v;
  v.owner = collection.sense.str();
  for (const Document& doc : collection.documents)
    for (const std::string& tok : tokenize(doc.text)) v.add(tok);
  return v;
}

ContingencyTable ContingencyTable::build(std::vector<FrequencyVector> rows) {
  ContingencyTable t;
  t.rows = std::move(rows);
  for (const FrequencyVector& row : t.rows) {
    for (const auto& [word, n] : row.counts) t.column_totals[word] += n;
    t.grand_total += row.total;
  }
  return t;
}

double expected_mean(const ContingencyTable& t, std::size_t row,
                     const std::string& word) {
  if (t.grand_total <= 0)
    throw error("degenerate contingency table: grand total is zero");
  if (row >= t.rows.size())
    throw range_error("contingency row out of range");
  auto it = t.column_totals.find(word);
  const std::int64_t col = it == t.column_totals.end() ? 0 : it->second;
  return static_cast<double>(t.rows[row].total) * static_cast<double>(col) /
         static_cast<double>(t.grand_total);
}

std::map<std::pair<std::size_t, std::string>, double> expected_means(
    const ContingencyTable& t) {
  if (t.grand_total <= 0)
    throw error("degenerate contingency table: grand total is zero");
  std::map<std::pair<std::size_t, std::string>, double> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (const auto& [word, col] : t.column_totals) {
      (void)col;
      out.emplace(std::make_pair(i, word), expected_mean(t, i, word));
    }
  return out;
}

void save_frequency_vector(const FrequencyVector& v,
                           const std::filesystem::path& path) {
  std::ostringstream out;
  out << "#topic " << v.owner << "\n";
  for (const auto& [word, n] : v.counts) out << word << "\t" << n << "\n";
  atomic_write_file(path, out.str());
}

FrequencyVector load_frequency_vector(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot read frequency vector: " + path.string());
  FrequencyVector v;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("#topic ", 0) == 0) {
      v.owner = line.substr(7);
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw format_error(path.string() + ":" + std::to_string(line_no) +
                         ": expected word<TAB>count");
    v.add(line.substr(0, tab), std::stoll(line.substr(tab + 1)));
  }
  return v;
}

}  // namespace topicsig
