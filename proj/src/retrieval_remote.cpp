#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "topicsig/errors.hpp"
#include "topicsig/fsio.hpp"
#include "topicsig/retrieval.hpp"

namespace topicsig {

using nlohmann::json;

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /path?query
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw config_error("not an http(s) url: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string decode_entity(std::string_view name) {
  if (name == "amp") return "&";
  if (name == "lt") return "<";
  if (name == "gt") return ">";
  if (name == "quot") return "\"";
  if (name == "apos") return "'";
  if (name == "nbsp") return " ";
  if (!name.empty() && name[0] == '#') {
    long code = 0;
    try {
      code = (name.size() > 2 && (name[1] == 'x' || name[1] == 'X'))
                 ? std::stol(std::string(name.substr(2)), nullptr, 16)
                 : std::stol(std::string(name.substr(1)));
    } catch (...) {
      return "";
    }
    if (code <= 0 || code > 0x10FFFF) return "";
    // UTF-8 encode
    std::string out;
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
    return out;
  }
  return "";  // unknown entity: drop
}

httplib::Client make_client(const std::string& origin, double timeout_s) {
  httplib::Client cli(origin);
  const auto sec = static_cast<time_t>(timeout_s);
  const auto usec =
      static_cast<time_t>((timeout_s - static_cast<double>(sec)) * 1e6);
  cli.set_connection_timeout(sec, usec);
  cli.set_read_timeout(sec, usec);
  cli.set_follow_location(true);
  return cli;
}

std::string http_get(const std::string& url, const SourceConfig& src,
                     const std::string& api_key) {
  const SplitUrl parts = split_url(url);
  std::string last_error;
  for (int attempt = 0; attempt <= src.retries; ++attempt) {
    httplib::Client cli = make_client(parts.origin, src.timeout_s);
    httplib::Headers headers;
    if (!api_key.empty()) headers.emplace("X-Api-Key", api_key);
    auto res = cli.Get(parts.path, headers);
    if (res && res->status >= 200 && res->status < 300) return res->body;
    if (res && res->status >= 400 && res->status < 500) {
      last_error = "http status " + std::to_string(res->status);
      break;  // client errors do not improve on retry
    }
    last_error = res ? "http status " + std::to_string(res->status)
                     : "transport failure (" +
                           httplib::to_string(res.error()) + ")";
  }
  throw transport_error("GET " + url + " failed: " + last_error, url);
}

}  // namespace

std::string strip_html(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  std::size_t i = 0;
  const std::size_t n = html.size();
  auto skip_block = [&](std::string_view open, std::string_view close) {
    // i points at '<'; returns true if a whole block was skipped
    if (html.size() - i < open.size()) return false;
    for (std::size_t k = 0; k < open.size(); ++k) {
      const char a = html[i + k];
      const char b = open[k];
      if (std::tolower(static_cast<unsigned char>(a)) != b) return false;
    }
    std::size_t j = i + open.size();
    while (j < n) {
      if (html[j] == '<' && n - j >= close.size()) {
        bool hit = true;
        for (std::size_t k = 0; k < close.size(); ++k)
          if (std::tolower(static_cast<unsigned char>(html[j + k])) !=
              close[k]) {
            hit = false;
            break;
          }
        if (hit) {
          j = html.find('>', j);
          i = j == std::string_view::npos ? n : j + 1;
          return true;
        }
      }
      ++j;
    }
    i = n;
    return true;
  };

  while (i < n) {
    const char c = html[i];
    if (c == '<') {
      if (skip_block("<script", "</script")) continue;
      if (skip_block("<style", "</style")) continue;
      const auto close = html.find('>', i);
      if (close == std::string_view::npos) break;
      i = close + 1;
      out.push_back(' ');  // tags separate words
      continue;
    }
    if (c == '&') {
      const auto semi = html.find(';', i);
      if (semi != std::string_view::npos && semi - i <= 10) {
        out += decode_entity(html.substr(i + 1, semi - i - 1));
        i = semi + 1;
        continue;
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

DocumentCollection remote_search(const SourceConfig& src,
                                 const BooleanQuery& q) {
  src.validate();
  DocumentCollection out;
  if (q.target) out.sense = *q.target;
  out.query_rendered = render_query(q);

  std::string api_key;
  if (!src.api_key_env.empty()) {
    const char* v = std::getenv(src.api_key_env.c_str());
    if (!v)
      throw config_error("environment variable " + src.api_key_env +
                         " is not set");
    api_key = v;
  }

  // Search request: GET <endpoint>?q=<query>, response is a JSON array of
  // result URLs in rank order.
  const SplitUrl endpoint = split_url(src.root_or_endpoint);
  std::string search_url =
      src.root_or_endpoint +
      (endpoint.path.find('?') == std::string::npos ? "?q=" : "&q=") +
      httplib::detail::encode_query_param(out.query_rendered);
  const std::string body = http_get(search_url, src, api_key);
  json results;
  try {
    results = json::parse(body);
  } catch (const json::exception& e) {
    throw transport_error(
        "search endpoint returned invalid JSON: " + std::string(e.what()),
        search_url);
  }
  if (!results.is_array())
    throw transport_error("search endpoint did not return a JSON array",
                          search_url);

  std::vector<std::string> urls;
  std::set<std::string> seen;
  for (const auto& item : results) {
    if (!item.is_string())
      throw transport_error("search result entry is not a string url",
                            search_url);
    std::string u = item.get<std::string>();
    if (seen.insert(u).second) urls.push_back(std::move(u));
    if (static_cast<int>(urls.size()) >= src.max_docs) break;
  }

  // Fetch bodies concurrently, bounded by src.concurrency; order of the
  // final collection is rank order regardless of completion order.
  std::vector<Document> docs(urls.size());
  std::vector<std::string> errors;
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= urls.size()) return;
        i = next++;
      }
      try {
        std::string page = http_get(urls[i], src, api_key);
        Document d;
        d.uri = urls[i];
        d.doc_id = "d" + sha256_hex(urls[i]).substr(0, 16);
        d.text = strip_html(page);
        d.retrieved_at = utc_timestamp_now();
        docs[i] = std::move(d);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        errors.emplace_back(e.what());
      }
    }
  };
  const int nthreads =
      std::min<int>(src.concurrency, static_cast<int>(urls.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (!errors.empty())
    throw transport_error("document fetch failed: " + errors.front(),
                          search_url);

  for (Document& d : docs)
    if (!d.uri.empty()) out.documents.push_back(std::move(d));
  return out;
}

}  // namespace topicsig
