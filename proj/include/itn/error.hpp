#ifndef ITN_ERROR_HPP_
#define ITN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itn {

// Bad user input: malformed files, out-of-range values, size violations.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed on-disk data; carries a 1-based line number when known.
class FormatError : public InputError {
 public:
  FormatError(const std::string& what, std::size_t line)
      : InputError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  explicit FormatError(const std::string& what) : InputError(what) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// Non-recoverable runtime failure (e.g. training divergence); exit code 1.
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace itn

#endif  // ITN_ERROR_HPP_
