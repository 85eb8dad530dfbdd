#pragma once

#include <stdexcept>
#include <string>

namespace unbent {

enum class errc {
  degree_exceeded,
  inconsistent_rotation,
  disconnected,
  parse_error,
  malformed_network,
  not_a_forest,
  not_a_partition,
  density_too_high,
  too_large,
  not_cubic,
  not_triconnected,
  strategy_inapplicable,
  placement_failed,
  bad_argument,
  internal,
};

const char* errc_name(errc c);

// Every library error is thrown as this type; `code` makes the failure
// machine-checkable, `line` is set by the text parser (1-based, -1 otherwise).
class error : public std::runtime_error {
 public:
  error(errc code, std::string message, int line = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                           (line >= 0 ? " (line " + std::to_string(line) + ")" : "")),
        code_(code),
        line_(line) {}

  errc code() const { return code_; }
  int line() const { return line_; }

 private:
  errc code_;
  int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg, int line = -1) {
  throw error(code, msg, line);
}

}  // namespace unbent
