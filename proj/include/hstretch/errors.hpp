#pragma once

#include <stdexcept>
#include <string>

namespace hstretch {

// Argument outside the domain of a formula or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph / hierarchy / CSV input. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A builder could not satisfy its structural contract (connected, balanced clusters).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RoutingLoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hstretch
