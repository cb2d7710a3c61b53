#ifndef GQS_ERRORS_HPP
#define GQS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqs {

// Input outside an operation's mathematical domain: bad labels, loops,
// duplicate edges, invalid permutations, out-of-range arguments.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a configured or structural size bound.
class CapacityError : public DomainError {
 public:
  explicit CapacityError(const std::string& what) : DomainError(what) {}
};

// Malformed serialized input (graph6 strings, edge lists, element payloads).
// Carries the byte offset of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gqs

#endif
