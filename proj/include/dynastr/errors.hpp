#pragma once

#include <stdexcept>
#include <string>

namespace dynastr {

// Caller passed an index or argument outside the operation's contract.
class UsageError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Value-level contract violation (negative element, unencodable symbol, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Search/select target does not exist.
class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Leaf is full; the owning tree must split before inserting.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dynastr
