#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdyn {

enum class ErrorKind {
  range,
  domain,
  capacity,
  seed,
  primitivity,
  insufficient_window,
  state,
  consistency,
  precondition,
  degenerate,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::range: return "range";
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::seed: return "seed";
    case ErrorKind::primitivity: return "primitivity";
    case ErrorKind::insufficient_window: return "insufficient_window";
    case ErrorKind::state: return "state";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::degenerate: return "degenerate";
  }
  return "unknown";
}

// Every failure the library reports carries one of the kinds above so callers
// (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace symdyn
