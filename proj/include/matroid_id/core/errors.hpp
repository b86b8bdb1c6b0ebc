#pragma once

#include <stdexcept>
#include <string>

namespace matroid_id {

// Raised when a fraction-free elimination step meets a division that does not
// come out exact. Always an internal bug, never a data problem.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid sampling / tolerance configuration (e.g. |E| <= alpha).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A persisted record references something that cannot be rebuilt.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work budget exhausted before an answer was reached.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t done, std::size_t total)
      : std::runtime_error(what), done_(done), total_(total) {}
  std::size_t done() const { return done_; }
  std::size_t total() const { return total_; }

 private:
  std::size_t done_;
  std::size_t total_;
};

}  // namespace matroid_id
