#include "topicsig/signature.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"

namespace topicsig {

TopicSignature chi2_signature(const ContingencyTable& t, std::size_t row) {
  if (t.grand_total <= 0)
    throw error("degenerate contingency table: grand total is zero");
  if (row >= t.rows.size())
    throw range_error("contingency row out of range");

  TopicSignature sig;
  sig.topic = t.rows[row].owner;
  sig.degenerate_contrast = t.rows.size() < 2;

  const std::int64_t row_total = t.rows[row].total;
  for (const auto& [word, freq] : t.rows[row].counts) {
    const std::int64_t col_total = t.column_totals.at(word);
    // freq > m  <=>  freq * grand > row_total * col_total; keeping the
    // comparison and the ratio in integers makes the weight invariant under
    // scaling every cell by the same constant.
    const std::int64_t num = freq * t.grand_total - row_total * col_total;
    if (num <= 0) continue;
    const double weight = static_cast<double>(num) /
                          static_cast<double>(row_total * col_total);
    sig.entries.push_back({word, weight});
  }
  std::sort(sig.entries.begin(), sig.entries.end(),
            [](const SignatureEntry& a, const SignatureEntry& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return a.word < b.word;
            });
  return sig;
}

TopicSignature top_k(const TopicSignature& s, std::size_t k) {
  if (k < 1) throw range_error("top_k requires k >= 1");
  TopicSignature out;
  out.topic = s.topic;
  out.degenerate_contrast = s.degenerate_contrast;
  const std::size_t n = std::min(k, s.entries.size());
  out.entries.assign(s.entries.begin(), s.entries.begin() + n);
  return out;
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", w);
  return buf;
}

void save_signature(const TopicSignature& s,
                    const std::filesystem::path& path) {
  std::ostringstream out;
  out << "#topic " << s.topic << "\n";
  for (const SignatureEntry& e : s.entries)
    out << e.word << "\t" << format_weight(e.weight) << "\n";
  atomic_write_file(path, out.str());
}

TopicSignature load_signature(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot read signature: " + path.string());
  TopicSignature s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("#topic ", 0) == 0) {
      s.topic = line.substr(7);
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw format_error(path.string() + ":" + std::to_string(line_no) +
                         ": expected word<TAB>weight");
    s.entries.push_back(
        {line.substr(0, tab), std::stod(line.substr(tab + 1))});
  }
  return s;
}

}  // namespace topicsig
