#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace drips {

// Malformed input data: CSV problems, duplicate points, mismatched
// dimensions, nesting violations. The CLI maps this to exit code 2.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal form; used wherever a double is printed
// outside of JSON so repeated runs are byte-identical.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace drips
