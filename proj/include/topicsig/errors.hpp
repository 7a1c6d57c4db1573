#pragma once

#include <stdexcept>
#include <string>

namespace topicsig {

// Base class for all library errors. The CLI maps subclasses onto exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (lexicon, corpus, stored artifact). Exit code 5.
class format_error : public error {
 public:
  using error::error;
};

// Bad configuration or missing prerequisite artifact. Exit code 3.
class config_error : public error {
 public:
  using error::error;
};

// Network / remote-source failure. Carries the failing URI. Exit code 4.
class transport_error : public error {
 public:
  transport_error(const std::string& message, std::string uri)
      : error(message), uri_(std::move(uri)) {}
  const std::string& uri() const { return uri_; }

 private:
  std::string uri_;
};

// Unknown sense id or similar key miss.
class lookup_error : public error {
 public:
  using error::error;
};

// Out-of-range argument (cut level, target index, ...).
class range_error : public error {
 public:
  using error::error;
};

}  // namespace topicsig
