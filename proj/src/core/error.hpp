#pragma once

#include <stdexcept>
#include <string>

namespace planex {

enum class ErrorKind {
  InvalidArgument,
  Precondition,
  Parse,
  Budget,
  Unsupported,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the C API maps `kind` onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace planex
